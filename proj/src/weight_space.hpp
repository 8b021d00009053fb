#pragma once

// Multigraded bookkeeping shared by the oracles. Every ideal handled here is
// spanned by torus weight vectors, so S/I, the Koszul complex and the ideal
// itself split into finite weight pieces that can be eliminated separately.

#include <cstdint>
#include <map>
#include <memory>
#include <unordered_map>
#include <utility>
#include <vector>

#include "permres/bigint.hpp"
#include "permres/errors.hpp"
#include "permres/ideal.hpp"
#include "permres/monomial.hpp"
#include "permres/prime_field.hpp"
#include "permres/sparse.hpp"

namespace permres::detail {

/// One weight piece of S: its monomials, the part lying in I, and a normal
/// form for every monomial written in the standard (non-pivot) monomials.
struct Piece {
    std::vector<Monomial> monomials;  // sorted, largest first
    std::unordered_map<Monomial, std::uint32_t, MonomialHash> index;
    std::vector<std::uint32_t> standard;      // positions of standard monomials
    std::vector<SparseVector> normal_form;    // per monomial, over standard positions
    std::size_t ideal_dim = 0;

    std::size_t quotient_dim() const { return standard.size(); }
};

struct WeightOrbit {
    Weight rep;
    BigInt size;
};

class WeightSpaceEngine {
public:
    WeightSpaceEngine(const IdealSpec& spec, const PrimeField& field, const ResourceLimits& limits);

    const Ring& ring() const { return ring_; }
    const IdealSpec& spec() const { return spec_; }

    int degree_of(const Weight& w) const;
    std::vector<Monomial> monomials_of_weight(const Weight& w) const;
    /// Wedges x_{v_1} ^ ... ^ x_{v_k} (v_1 < ... < v_k) whose weight fits below w.
    std::vector<Wedge> wedges_below(const Weight& w, int k) const;

    const Piece& piece(const Weight& w);

    /// dim of the weight-w part of Lambda^k V (x) S/I.
    std::size_t chain_dim(const Weight& w, int k);
    /// Rank of the Koszul differential Lambda^k (x) S/I -> Lambda^{k-1} (x) S/I
    /// restricted to total weight w. Zero for k <= 0.
    std::size_t koszul_rank(const Weight& w, int k);
    /// Koszul homology at Lambda^k (x) S/I in total weight w.
    std::size_t koszul_homology(const Weight& w, int k);

    /// All weights of the given degree, or one representative per orbit of
    /// the symmetry group (row and column permutations, plus transposition
    /// for the matrix families) together with the orbit size.
    std::vector<WeightOrbit> weights_of_degree(int degree, bool symmetric) const;

    std::uint64_t nonzeros_used() const { return used_; }

private:
    struct Generator {
        Weight weight;
        std::vector<std::pair<Monomial, std::int64_t>> terms;
    };
    struct Block {
        Wedge wedge;
        const Piece* piece;
        std::uint32_t offset;
    };

    std::vector<Block> layout(const Weight& w, int k, std::uint32_t& total);
    void charge(std::uint64_t amount);
    Weight minus(const Weight& w, const Wedge& wedge) const;

    IdealSpec spec_;
    Ring ring_;
    PrimeField field_;
    ResourceLimits limits_;
    std::vector<Generator> generators_;
    std::map<Weight, std::unique_ptr<Piece>> pieces_;
    std::map<std::pair<Weight, int>, std::size_t> ranks_;
    std::uint64_t used_ = 0;
};

/// Compositions of `total` into `parts` nonnegative entries, lexicographically
/// decreasing.
std::vector<std::vector<int>> compositions(int total, int parts);

}  // namespace permres::detail
