#include <doctest.h>

#include <random>

#include "oracles/tableaux.hpp"
#include "permres/partitions.hpp"

using namespace permres;

TEST_CASE("partition construction") {
    const Partition p{3, 1, 0, 0};
    CHECK(p.length() == 2);
    CHECK(p.weight() == 4);
    CHECK(p[5] == 0);
    CHECK(p.is_hook());
    CHECK_FALSE(Partition({2, 2}).is_hook());
    CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({2, -1}), std::invalid_argument);
    CHECK(Partition::hook(3, 2) == Partition({3, 1, 1}));
    CHECK(Partition::rectangle(2, 3) == Partition({2, 2, 2}));
    CHECK(Partition({2, 1}).padded(4) == std::vector<int>{2, 1, 0, 0});
    CHECK_THROWS(Partition({1, 1, 1}).padded(2));
}

TEST_CASE("conjugation") {
    CHECK(conjugate(Partition{3}) == Partition({1, 1, 1}));
    CHECK(conjugate(Partition{2, 1}) == Partition({2, 1}));
    CHECK(conjugate(Partition{}) == Partition{});
    for (int w = 0; w <= 9; ++w) {
        for (const auto& p : partitions_of(w)) CHECK(conjugate(conjugate(p)) == p);
    }
    // hook transposes (k+b+1, 1^{a-1}) <-> (a, 1^{k+b}) on random hooks
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> pick(1, 6);
    for (int trial = 0; trial < 10; ++trial) {
        const int k = pick(rng), a = pick(rng), b = pick(rng) - 1;
        CHECK(conjugate(Partition::hook(k + b + 1, a - 1)) == Partition::hook(a, k + b));
    }
}

TEST_CASE("partitions_of") {
    CHECK(partitions_of(0).size() == 1);
    CHECK(partitions_of(5).size() == 7);
    CHECK(partitions_of(10).size() == 42);
    CHECK(partitions_of(5).front() == Partition{5});
    CHECK(partitions_of(5, 2).size() == 3);
    CHECK(partitions_of(6, 3, 2) == std::vector<Partition>{Partition{2, 2, 2}});
    for (const auto& p : partitions_of(8, 3, 4)) {
        CHECK(p.weight() == 8);
        CHECK(p.length() <= 3);
        CHECK(p[0] <= 4);
    }
}

TEST_CASE("specht dimensions match tableau enumeration") {
    CHECK(specht_dim(Partition{4}) == 1);
    CHECK(specht_dim(Partition{2, 1}) == 2);
    for (int m = 1; m <= 8; ++m) {
        for (const auto& p : partitions_of(m)) CHECK(specht_dim(p) == oracle::count_syt(p.parts()));
    }
    for (int m = 1; m <= 7; ++m) {
        BigInt total = 0;
        for (const auto& p : partitions_of(m)) total += specht_dim(p) * specht_dim(p);
        CHECK(total == factorial(m));
    }
    for (int k = 1; k <= 5; ++k) {
        for (int j = 1; j <= 5; ++j) CHECK(specht_dim(Partition::hook(k, j - 1)) == binomial(k + j - 2, j - 1));
    }
}

TEST_CASE("schur dimensions match semistandard tableaux") {
    CHECK(schur_dim(Partition{1, 1, 1}, 3) == 1);
    CHECK(schur_dim(Partition{2, 1}, 3) == 8);
    CHECK(schur_dim(Partition{1, 1, 1, 1}, 3) == 0);
    CHECK(schur_dim(Partition{}, 4) == 1);
    for (int m = 1; m <= 4; ++m) {
        for (int w = 1; w <= 6; ++w) {
            for (const auto& p : partitions_of(w)) {
                const BigInt d = schur_dim(p, m);
                CHECK(d == oracle::count_ssyt(p.parts(), m));
                CHECK((d == 0) == (p.length() > m));
            }
        }
    }
}

TEST_CASE("induced dimensions") {
    for (int n = 1; n <= 6; ++n) {
        for (int k = 0; k <= n; ++k) {
            CHECK(induced_dim(1, factorial(k) * factorial(n - k), factorial(n)) == binomial(n, k));
        }
    }
    CHECK(induced_dim(7, 24, 24) == 7);
    CHECK_THROWS_AS(induced_dim(1, 4, 6), std::invalid_argument);
    // The hook module [k,1^{j-1}] induced from S_{k+j-1} x S_{n-k-j+1}.
    const int n = 6, k = 2, j = 3;
    CHECK(induced_dim(binomial(k + j - 2, j - 1), factorial(k + j - 1) * factorial(n - k - j + 1), factorial(n)) ==
          binomial(k + j - 2, j - 1) * binomial(n, k + j - 1));
}

TEST_CASE("generator sum rule via induced modules") {
    // C(n,k)^2 = sum over the S_n x S_n decomposition of the sub-permanent span:
    // each [k] (x) [k] summand induced from (S_k x S_{n-k})^2.
    for (int n = 1; n <= 6; ++n) {
        for (int k = 1; k <= n; ++k) {
            const BigInt h = factorial(k) * factorial(n - k);
            CHECK(induced_dim(specht_dim(Partition{k}) * specht_dim(Partition{k}), h * h, factorial(n) * factorial(n)) ==
                  binomial(n, k) * binomial(n, k));
        }
    }
}

TEST_CASE("weight sequences") {
    const auto w = WeightSequence::shifted(2, Partition{3, 1}, 5);
    CHECK(w.entries() == std::vector<int>{0, 0, 3, 1, 0});
    CHECK_FALSE(w.is_partition());
    CHECK(WeightSequence{3, 1, 0}.is_partition());
    CHECK_THROWS(WeightSequence::shifted(2, Partition{1, 1, 1, 1}, 5));
}
