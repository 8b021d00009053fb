#pragma once

#include <cstdint>
#include <vector>

#include "permres/errors.hpp"
#include "permres/monomial.hpp"
#include "permres/prime_field.hpp"
#include "permres/tensor.hpp"

namespace permres {

/// All monomials of degree d in the n^2 matrix variables, in basis order
/// (lexicographic on row-major exponent vectors, largest first). Throws
/// ResourceCapError when C(n^2+d-1, d) exceeds `cap`.
std::vector<Monomial> graded_basis(int n, int d, std::uint64_t cap = ResourceLimits{}.max_basis);
std::vector<Monomial> graded_basis(const Ring& ring, int d, std::uint64_t cap = ResourceLimits{}.max_basis);

/// Rank over `field` of the span of {g * m}: g runs over `generators`
/// (polynomials of degree `from_degree`) and m over all monomials of degree
/// to_degree - from_degree. This is dim of the degree-t piece of the ideal.
///
/// When every generator is a torus weight vector the matrix is block diagonal
/// by weight and the blocks are eliminated separately; otherwise a single
/// matrix over graded_basis(ring, to_degree) is used.
std::size_t multiply_map_rank(const Ring& ring, const std::vector<TensorElement>& generators, int from_degree,
                              int to_degree, const PrimeField& field, const ResourceLimits& limits = {});

/// Same quantity, always as one matrix whose rows are indexed by the full
/// graded basis. Kept as a cross-check for the blocked path.
std::size_t multiply_map_rank_direct(const Ring& ring, const std::vector<TensorElement>& generators,
                                     int from_degree, int to_degree, const PrimeField& field,
                                     const ResourceLimits& limits = {});

}  // namespace permres
