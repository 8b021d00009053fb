#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "permres/bigint.hpp"

namespace permres {

/// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(std::uint64_t value);

/// Arithmetic modulo a prime p with 2^30 < p < 2^31.
class PrimeField {
public:
    static constexpr std::uint32_t kMin = 1u << 30;
    static constexpr std::uint32_t kMax = 1u << 31;

    /// Throws std::invalid_argument if the modulus is out of range or composite.
    explicit PrimeField(std::uint32_t modulus);

    std::uint32_t modulus() const { return p_; }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
        std::uint32_t s = a + b;  // < 2^32, no overflow
        return s >= p_ ? s - p_ : s;
    }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return a >= b ? a - b : a + p_ - b; }
    std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p_ - a; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p_);
    }
    std::uint32_t pow(std::uint32_t base, std::uint64_t exp) const;
    std::uint32_t inv(std::uint32_t a) const;
    std::uint32_t from_int(std::int64_t value) const;

    bool operator==(const PrimeField&) const = default;

private:
    std::uint32_t p_;
};

/// `count` distinct primes in (2^30, 2^31) drawn from a seeded generator.
/// The same seed always yields the same primes.
std::vector<PrimeField> choose_primes(std::uint64_t seed, std::size_t count);

/// Outcome of evaluating one exact quantity modulo several primes.
struct ConsensusResult {
    BigInt value;
    std::vector<std::uint32_t> primes_used;
    bool tie_broken = false;
};

using ConsensusLogger = std::function<void(const std::string&)>;

/// Evaluates `compute` over the first two primes; if they disagree, a third
/// prime decides by majority and the event is reported through `log`.
/// `primes` must hold at least three fields. Throws std::runtime_error when all
/// three values differ.
ConsensusResult consensus(const std::vector<PrimeField>& primes,
                          const std::function<BigInt(const PrimeField&)>& compute,
                          const ConsensusLogger& log = {});

}  // namespace permres
