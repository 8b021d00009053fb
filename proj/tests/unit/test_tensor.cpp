#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>

#include "oracles/monomial_count.hpp"
#include "permres/graded.hpp"
#include "permres/ideal.hpp"
#include "permres/sparse.hpp"
#include "permres/tensor.hpp"

using namespace permres;

namespace {

const PrimeField kField(2147483647u);

Monomial mono(std::vector<int> vars) { return Monomial::from_vars(std::move(vars)); }

TensorElement random_element(std::mt19937_64& rng, int vars, int degree, int rank) {
    std::uniform_int_distribution<int> var(0, vars - 1);
    std::uniform_int_distribution<int> coeff(-5, 5);
    TensorElement x(degree, rank);
    for (int term = 0; term < 6; ++term) {
        std::vector<int> m, w;
        for (int i = 0; i < degree; ++i) m.push_back(var(rng));
        for (int i = 0; i < rank; ++i) w.push_back(var(rng));
        x.add(mono(m), w, coeff(rng));
    }
    return x;
}

}  // namespace

TEST_CASE("monomial order and weights") {
    const Ring r = Ring::grid(2);
    CHECK(r.var(1, 0) == 2);
    CHECK(r.cell(3) == std::pair{1, 1});
    CHECK(r.var_name(r.var(0, 1)) == "x12");
    const auto basis = all_monomials(r, 2);
    REQUIRE(basis.size() == 10);
    CHECK(basis.front() == mono({0, 0}));
    CHECK(basis.back() == mono({3, 3}));
    for (std::size_t i = 1; i < basis.size(); ++i) CHECK(basis[i - 1] < basis[i]);
    CHECK(mono({0, 3}).weight(r) == Weight{1, 1, 1, 1});
    CHECK(mono({0, 1}).weight(r) == Weight{2, 0, 1, 1});
    CHECK(Monomial::from_exponents({0, 2, 1}) == mono({2, 1, 1}));
}

TEST_CASE("wedge normalization") {
    Wedge w;
    int sign = 0;
    REQUIRE(Wedge::normalize({3, 1, 2}, w, sign));
    CHECK(w.vars() == std::vector<int>{1, 2, 3});
    CHECK(sign == 1);
    REQUIRE(Wedge::normalize({2, 1}, w, sign));
    CHECK(sign == -1);
    CHECK_FALSE(Wedge::normalize({1, 1}, w, sign));
    TensorElement x(0, 2);
    x.add(Monomial{}, {1, 0}, 1);
    x.add(Monomial{}, {0, 1}, 1);
    CHECK(x.is_zero());
}

TEST_CASE("graded basis sizes") {
    CHECK(graded_basis(2, 1).size() == 4);
    CHECK(graded_basis(3, 3).size() == 165);
    CHECK(graded_basis(3, 3).size() == oracle::count_monomials(9, 3));
    CHECK(graded_basis(1, 5).size() == 1);
    CHECK(graded_basis(2, 0).size() == 1);
    CHECK_THROWS_AS(graded_basis(5, 20), ResourceCapError);
}

TEST_CASE("multiply_map_rank") {
    const Ring r = Ring::grid(3);
    const auto gens = expand_generators({Family::subpermanents, 3, 2});
    CHECK(multiply_map_rank(r, {gens.front()}, 2, 2, kField) == 1);
    CHECK(multiply_map_rank(r, gens, 2, 2, kField) == 9);
    CHECK(multiply_map_rank(r, gens, 2, 3, kField) == 77);
    CHECK(multiply_map_rank_direct(r, gens, 2, 3, kField) == 77);

    // the whole space
    std::vector<TensorElement> all;
    for (const auto& m : graded_basis(2, 2)) {
        TensorElement g(2, 0);
        g.add(m, {}, 1);
        all.push_back(g);
    }
    CHECK(multiply_map_rank(Ring::grid(2), all, 2, 4, kField) == 35);

    // order independence
    auto shuffled = gens;
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 3; ++trial) {
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        CHECK(multiply_map_rank(r, shuffled, 2, 3, kField) == 77);
    }

    ResourceLimits tiny;
    tiny.max_basis = 100;
    CHECK_THROWS_AS(multiply_map_rank_direct(r, gens, 2, 3, kField, tiny), ResourceCapError);
}

TEST_CASE("koszul transpose squares to zero") {
    TensorElement vw(0, 2);
    vw.add(Monomial{}, {0, 1}, 1);
    const TensorElement once = koszul_transpose(vw);
    TensorElement expected(1, 1);
    expected.add(mono({0}), {1}, 1);
    expected.add(mono({1}), {0}, -1);
    CHECK(once == expected);
    CHECK(koszul_transpose(once).is_zero());

    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> pick_n(1, 3), pick_q(0, 3), pick_p(0, 3);
    int tested = 0;
    while (tested < 100) {
        const int n = pick_n(rng);
        const int vars = n * n;
        const int p = pick_p(rng);
        if (p + 2 > vars) continue;
        const TensorElement x = random_element(rng, vars, pick_q(rng), p + 2);
        CHECK(koszul_transpose(koszul_transpose(x)).is_zero());
        ++tested;
    }
    CHECK_THROWS_AS(koszul_transpose(TensorElement(2, 0)), std::invalid_argument);
}

TEST_CASE("repeated-row Laplace element is killed by multiplication") {
    const Ring r = Ring::grid(3);
    // M^{12}_{23} (x) x11 - M^{12}_{13} (x) x12 + M^{12}_{12} (x) x13
    auto minor = [&](int c1, int c2) {
        return submatrix_polynomial(r, {{0, 1}, {c1, c2}}, SignMode::determinant);
    };
    TensorElement hwa(2, 1);
    const std::vector<std::pair<TensorElement, int>> parts = {
        {minor(1, 2), r.var(0, 0)}, {minor(0, 2), r.var(0, 1)}, {minor(0, 1), r.var(0, 2)}};
    int sign = 1;
    for (const auto& [m, v] : parts) {
        for (const auto& [term, c] : m.terms()) hwa.add(term.mono, {v}, sign * c);
        sign = -sign;
    }
    CHECK(koszul_transpose(hwa).is_zero());

    // x11 is a nonzerodivisor: M^{12}_{12} (x) x11 survives
    const TensorElement m12 = minor(0, 1);
    TensorElement single(2, 1);
    for (const auto& [term, c] : m12.terms()) single.add(term.mono, {r.var(0, 0)}, c);
    const TensorElement image = koszul_transpose(single);
    CHECK_FALSE(image.is_zero());
    CHECK(image == multiply(m12, mono({r.var(0, 0)})));
}

TEST_CASE("kernel_dim") {
    LinearMapSpec zero{5, 3, std::vector<std::vector<std::pair<std::uint32_t, std::int64_t>>>(5)};
    CHECK(kernel_dim(zero, kField) == 5);
    LinearMapSpec id{4, 4, {}};
    for (std::uint32_t i = 0; i < 4; ++i) id.images.push_back({{i, 1}});
    CHECK(kernel_dim(id, kField) == 0);
    LinearMapSpec bad{1, 2, {{{5, 1}}}};
    CHECK_THROWS_AS(kernel_dim(bad, kField), std::invalid_argument);

    // ker(I_2 (x) V -> S^3 V) for the 2x2 sub-permanents of a 3x3 matrix
    const Ring r = Ring::grid(3);
    const auto gens = expand_generators({Family::subpermanents, 3, 2});
    const auto target = graded_basis(3, 3);
    std::map<Monomial, std::uint32_t> index;
    for (std::uint32_t i = 0; i < target.size(); ++i) index[target[i]] = i;
    LinearMapSpec mult{gens.size() * 9, target.size(), {}};
    for (const auto& g : gens) {
        for (int v = 0; v < 9; ++v) {
            std::vector<std::pair<std::uint32_t, std::int64_t>> img;
            for (const auto& [term, c] : g.terms()) img.push_back({index.at(term.mono.times(v)), c});
            mult.images.push_back(img);
        }
    }
    CHECK(kernel_dim(mult, kField) == 4);
}

TEST_CASE("weight homogeneity") {
    const Ring r = Ring::grid(3);
    Weight w;
    for (const auto& g : expand_generators({Family::minors, 3, 2})) CHECK(g.weight_homogeneous(r, w));
    TensorElement mixed(1, 0);
    mixed.add(mono({0}), {}, 1);
    mixed.add(mono({1}), {}, 1);
    CHECK_FALSE(mixed.weight_homogeneous(r, w));
}
