#include "permres/prime_field.hpp"

#include <random>
#include <stdexcept>

namespace permres {

namespace {

using u128 = unsigned __int128;

std::uint64_t mulmod64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod64(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t result = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1) result = mulmod64(result, base, m);
        base = mulmod64(base, base, m);
        exp >>= 1;
    }
    return result;
}

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t small : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % small == 0) return n == small;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // These witnesses are sufficient for all n < 2^64.
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod64(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

PrimeField::PrimeField(std::uint32_t modulus) : p_(modulus) {
    if (modulus <= kMin || modulus >= kMax) {
        throw std::invalid_argument("prime modulus must lie strictly between 2^30 and 2^31");
    }
    if (!is_prime(modulus)) throw std::invalid_argument("modulus " + std::to_string(modulus) + " is not prime");
}

std::uint32_t PrimeField::pow(std::uint32_t base, std::uint64_t exp) const {
    return static_cast<std::uint32_t>(powmod64(base, exp, p_));
}

std::uint32_t PrimeField::inv(std::uint32_t a) const {
    if (a % p_ == 0) throw std::domain_error("inverse of zero in prime field");
    return pow(a, p_ - 2);
}

std::uint32_t PrimeField::from_int(std::int64_t value) const {
    std::int64_t r = value % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    return static_cast<std::uint32_t>(r);
}

std::vector<PrimeField> choose_primes(std::uint64_t seed, std::size_t count) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint32_t> dist(PrimeField::kMin + 1, PrimeField::kMax - 1);
    std::vector<PrimeField> out;
    while (out.size() < count) {
        std::uint32_t candidate = dist(rng) | 1u;
        if (candidate >= PrimeField::kMax || !is_prime(candidate)) continue;
        bool fresh = true;
        for (const auto& f : out) fresh = fresh && f.modulus() != candidate;
        if (fresh) out.emplace_back(candidate);
    }
    return out;
}

ConsensusResult consensus(const std::vector<PrimeField>& primes,
                          const std::function<BigInt(const PrimeField&)>& compute,
                          const ConsensusLogger& log) {
    if (primes.size() < 3) throw std::invalid_argument("consensus needs three candidate primes");
    ConsensusResult result;
    BigInt a = compute(primes[0]);
    BigInt b = compute(primes[1]);
    result.primes_used = {primes[0].modulus(), primes[1].modulus()};
    if (a == b) {
        result.value = a;
        return result;
    }
    BigInt c = compute(primes[2]);
    result.primes_used.push_back(primes[2].modulus());
    result.tie_broken = true;
    if (c != a && c != b) {
        throw std::runtime_error("modular results disagree across three primes: " + a.str() + ", " +
                                 b.str() + ", " + c.str());
    }
    result.value = c;
    if (log) {
        log("prime disagreement: p=" + std::to_string(primes[0].modulus()) + " gave " + a.str() +
            ", p=" + std::to_string(primes[1].modulus()) + " gave " + b.str() + "; p=" +
            std::to_string(primes[2].modulus()) + " decided " + c.str());
    }
    return result;
}

}  // namespace permres
