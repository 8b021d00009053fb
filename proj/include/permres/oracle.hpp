#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "permres/bigint.hpp"
#include "permres/errors.hpp"
#include "permres/ideal.hpp"
#include "permres/monomial.hpp"
#include "permres/prime_field.hpp"

namespace permres {

struct OracleConfig {
    ResourceLimits limits;
    /// Work with one weight per orbit of row/column permutations (and
    /// transposition for the matrix families). Turning this off sums over
    /// every weight and exists to cross-check the orbit bookkeeping.
    bool use_symmetry = true;
};

enum class Provenance { formula, oracle };

/// Degree -> dimension, with the ideal and primes that produced it.
struct GradedDims {
    IdealSpec spec;
    std::map<int, BigInt> dims;
    std::vector<std::uint32_t> primes;
    double seconds = 0.0;
    Provenance source = Provenance::oracle;

    BigInt at(int t) const;
};

/// (step, degree) -> graded Betti number of the ideal; step 0 counts the
/// minimal generators.
struct BettiTable {
    IdealSpec spec;
    std::map<std::pair<int, int>, BigInt> entries;
    std::vector<std::uint32_t> primes;
    double seconds = 0.0;
    Provenance source = Provenance::oracle;

    BigInt at(int step, int degree) const;
    void set(int step, int degree, const BigInt& value);
    /// Nonzero entries only.
    std::map<std::pair<int, int>, BigInt> nonzero() const;
    BigInt step_total(int step) const;
};

/// dim C(N+t-1, t) of the degree-t piece of the ambient polynomial ring.
BigInt ambient_dim(const IdealSpec& spec, int t);

/// dim I_t by elimination in each weight piece. Zero for t < kappa.
BigInt hilbert_oracle(const IdealSpec& spec, int t, const PrimeField& field, const OracleConfig& config = {});

/// Same quantity computed as multiply_map_rank of the expanded generators.
BigInt hilbert_oracle_direct(const IdealSpec& spec, int t, const PrimeField& field, const ResourceLimits& limits = {});

struct QuotientBasis {
    std::vector<Monomial> monomials;  // sorted, largest first
    BigInt dimension;
};

/// Standard monomials spanning (S/I)_t: the non-pivot columns of the reduced
/// echelon form in each weight piece.
QuotientBasis quotient_basis(const IdealSpec& spec, int t, const PrimeField& field, const OracleConfig& config = {});

/// dim (S/I)_t without materializing the basis.
BigInt quotient_dim(const IdealSpec& spec, int t, const PrimeField& field, const OracleConfig& config = {});

/// Graded Betti number b_{i,d} of the ideal, as Koszul homology of S/I at
/// Lambda^{i+1} (x) (S/I)_{d-i-1}. Throws ResourceCapError past the cap.
BigInt betti_oracle(const IdealSpec& spec, int i, int d, const PrimeField& field, const OracleConfig& config = {});

/// Every b_{i,d} with d <= max_degree.
BettiTable betti_table(const IdealSpec& spec, int max_degree, const PrimeField& field, const OracleConfig& config = {});

/// The two-prime agreement gate: runs `compute` under the first two fields,
/// and a third on disagreement. Logging goes to stderr.
BigInt agreed(const std::vector<PrimeField>& primes, const std::function<BigInt(const PrimeField&)>& compute,
              std::vector<std::uint32_t>* primes_used = nullptr);

}  // namespace permres
