#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "permres/bigint.hpp"
#include "permres/partitions.hpp"

namespace permres {

/// One irreducible summand S_{lambda_E} E (x) S_{lambda_F} F of the generators
/// of a resolution step, placed in polynomial degree `degree`.
struct ResolutionTerm {
    int step = 0;    // j, counting the generators of the ideal as step 1
    int s = 0;       // strand parameter; the linear strand is s = 1
    int degree = 0;  // s*r + j for the Lascoux resolution
    Partition lambda_e;
    Partition lambda_f;
    BigInt dimension;

    std::string to_string() const;
    bool operator==(const ResolutionTerm&) const = default;
    /// By step, degree, then the partition pair.
    bool operator<(const ResolutionTerm& other) const;
};

/// Generators of step j of the resolution of the (r+1)-minors of a generic
/// n x n matrix, read off directly: for 1 <= s <= floor(sqrt j) and alpha,
/// beta with |alpha|+|beta| = j-s^2 and lengths <= s,
///   lambda_E = (s)^{r+s} + (alpha, 0^r, beta'),  lambda_F = (s)^{r+s} + (beta, 0^r, alpha').
/// Terms that vanish for dim E = dim F = n are dropped. Sorted.
std::vector<ResolutionTerm> lascoux_terms(int n, int r, int j);

/// Sum of term dimensions.
BigInt total_dimension(const std::vector<ResolutionTerm>& terms);

struct BottOutcome {
    bool wall = false;
    int u = 0;           // number of dotted reflections applied
    Partition result;    // meaningful only when !wall

    bool operator==(const BottOutcome&) const = default;
};

/// Dotted Weyl action sigma_i.(..., a_i, a_{i+1}, ...) = (..., a_{i+1}-1, a_i+1, ...),
/// applied at the smallest ascent until the sequence is a partition or a
/// fixed point (a_{i+1} = a_i + 1) is met. Sequences with a negative tail
/// are rejected with std::invalid_argument.
BottOutcome bott_reduce(const WeightSequence& seq);

/// Same reduction with the ascent chosen uniformly at random at every step.
BottOutcome bott_reduce_random(const WeightSequence& seq, std::mt19937_64& rng);

/// Step j assembled through Bott's theorem on the Grassmannian: for each s,
/// every pi of weight j+rs with pi_1 <= n and length <= n-r whose sequence
/// (0^r, pi) reduces with exactly rs reflections contributes
/// S_{result} E (x) S_{pi'} F. Sorted.
std::vector<ResolutionTerm> resolution_via_bott(int n, int r, int j);

/// Linear strand of S^kappa E (x) S^kappa F, the ideal spanned by all kappa x kappa
/// products of the matrix entries that are symmetric in rows and columns:
/// sum_{a+b=j-1} S_{(kappa+b,1^a)} E (x) S_{(kappa+a,1^b)} F in degree kappa+j-1,
/// with terms longer than n dropped. Sorted.
std::vector<ResolutionTerm> perm_ambient_linear_strand(int n, int kappa, int j);

/// Dimension of the part of a term spanned by regular weight vectors (all
/// row and column weights 0 or 1): C(n,|lambda_E|) C(n,|lambda_F|) times the
/// number of standard tableaux of each shape.
BigInt regular_dimension(const ResolutionTerm& term, int n);

}  // namespace permres
