#include <doctest.h>

#include <set>
#include <string>

#include "permres/bigint.hpp"
#include "permres/prime_field.hpp"

using namespace permres;

TEST_CASE("binomials and factorials") {
    CHECK(binomial(11, 3) == 165);
    CHECK(binomial(5, 0) == 1);
    CHECK(binomial(5, 6) == 0);
    CHECK(binomial(5, -1) == 0);
    CHECK(binomial(-2, 1) == 0);
    CHECK(factorial(0) == 1);
    CHECK(factorial(10) == 3628800);
    // past 64 bits
    CHECK(to_string(binomial(100, 50)) == "100891344545564193334812497256");
    for (int n = 0; n <= 30; ++n) {
        for (int k = 1; k <= n; ++k) CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
    }
}

TEST_CASE("parse_bigint") {
    CHECK(parse_bigint("5200") == 5200);
    CHECK(parse_bigint("-17") == -17);
    CHECK(parse_bigint("123456789012345678901234567890") == BigInt("123456789012345678901234567890"));
    CHECK_THROWS_AS(parse_bigint(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_bigint("12a"), std::invalid_argument);
    CHECK_THROWS_AS(parse_bigint("-"), std::invalid_argument);
}

TEST_CASE("primality agrees with trial division") {
    auto trial = [](std::uint64_t v) {
        if (v < 2) return false;
        for (std::uint64_t d = 2; d * d <= v; ++d) {
            if (v % d == 0) return false;
        }
        return true;
    };
    for (std::uint64_t v = 0; v < 5000; ++v) CHECK(is_prime(v) == trial(v));
    for (std::uint64_t v = (1u << 30) + 1; v < (1u << 30) + 400; ++v) CHECK(is_prime(v) == trial(v));
    CHECK(is_prime(2147483647ull));
    CHECK_FALSE(is_prime(3215031751ull));  // strong pseudoprime to bases 2,3,5,7
}

TEST_CASE("prime field arithmetic") {
    const PrimeField f(2147483647u);
    CHECK(f.add(f.modulus() - 1, 5) == 4);
    CHECK(f.sub(3, 5) == f.modulus() - 2);
    CHECK(f.neg(0) == 0);
    CHECK(f.from_int(-1) == f.modulus() - 1);
    for (std::uint32_t a : {1u, 2u, 12345u, 2147483646u}) CHECK(f.mul(a, f.inv(a)) == 1);
    CHECK(f.pow(3, f.modulus() - 1) == 1);
    CHECK_THROWS_AS(PrimeField(1000003u), std::invalid_argument);
    CHECK_THROWS_AS(PrimeField((1u << 30) + 2), std::invalid_argument);
}

TEST_CASE("seeded prime choice") {
    const auto a = choose_primes(7, 5);
    const auto b = choose_primes(7, 5);
    const auto c = choose_primes(8, 5);
    REQUIRE(a.size() == 5);
    CHECK(a == b);
    CHECK_FALSE(a == c);
    std::set<std::uint32_t> seen;
    for (const auto& p : a) {
        CHECK(p.modulus() > PrimeField::kMin);
        CHECK(p.modulus() < PrimeField::kMax);
        CHECK(is_prime(p.modulus()));
        seen.insert(p.modulus());
    }
    CHECK(seen.size() == 5);
}

TEST_CASE("consensus and tie-break") {
    const auto primes = choose_primes(1, 3);
    auto agree = consensus(primes, [](const PrimeField&) { return BigInt(42); });
    CHECK(agree.value == 42);
    CHECK(agree.primes_used.size() == 2);
    CHECK_FALSE(agree.tie_broken);

    // The first prime gives a wrong answer; the third sides with the second.
    const std::uint32_t bad = primes[0].modulus();
    std::string logged;
    auto fixed = consensus(
        primes, [&](const PrimeField& f) { return BigInt(f.modulus() == bad ? 41 : 42); },
        [&](const std::string& msg) { logged = msg; });
    CHECK(fixed.value == 42);
    CHECK(fixed.tie_broken);
    CHECK(fixed.primes_used.size() == 3);
    CHECK_FALSE(logged.empty());

    int calls = 0;
    CHECK_THROWS_AS(consensus(primes, [&](const PrimeField&) { return BigInt(calls++); }), std::runtime_error);
    CHECK_THROWS(consensus({primes[0], primes[1]}, [](const PrimeField&) { return BigInt(0); }));
}
