#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "permres/bigint.hpp"

namespace permres {

/// A simplicial complex on vertices 0..num_vertices-1 (at most 64), presented
/// by its minimal non-faces. Faces are the subsets containing no non-face.
class SimplicialComplex {
public:
    using Mask = std::uint64_t;

    /// Non-faces need not be minimal; redundant ones are discarded. The
    /// empty set is not allowed as a non-face.
    SimplicialComplex(int num_vertices, std::vector<Mask> non_faces);
    /// The complex generated by the given faces.
    static SimplicialComplex from_facets(int num_vertices, const std::vector<Mask>& facets);

    int num_vertices() const { return num_vertices_; }
    /// Sorted by (size, value).
    const std::vector<Mask>& minimal_non_faces() const { return non_faces_; }
    bool is_face(Mask face) const;
    /// Maximal faces, sorted by (size, value).
    std::vector<Mask> facets() const;

private:
    int num_vertices_;
    std::vector<Mask> non_faces_;
};

/// Thrown by count_faces when the DFS visits more nodes than allowed.
struct FaceCountCapError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Faces of dimension -1..max_dim (entry 0 is the empty face), by DFS over
/// increasing vertex sets with pruning at the first contained non-face.
std::vector<BigInt> count_faces(const SimplicialComplex& delta, int max_dim,
                                std::uint64_t node_cap = 100'000'000);

/// (f_{-1}, f_0, ..., f_{dim}).
std::vector<BigInt> f_vector(const SimplicialComplex& delta);

/// Coefficients of h(t) = f(t-1), where f(t) = sum_{i=0}^{d} f_{i-1} t^{d-i}
/// and d = dim + 1.
std::vector<BigInt> h_vector(const SimplicialComplex& delta);

/// All subsets of {0..n-1} with at most dim+1 elements.
SimplicialComplex skeleton_complex(int n, int dim);

/// The complex of complements of non-faces: {tau : complement(tau) not a face}.
/// Throws std::invalid_argument for the full simplex, whose dual is void.
SimplicialComplex alexander_dual(const SimplicialComplex& delta);

/// Minimal generators of the Stanley-Reisner ideal of the Alexander dual, as
/// sorted vertex lists, ordered by (size, lexicographic). The full simplex
/// yields an empty list.
std::vector<std::vector<int>> alexander_dual_ideal(const SimplicialComplex& delta);

/// Stanley-Reisner ideal generators of delta in the same format.
std::vector<std::vector<int>> stanley_reisner_generators(const SimplicialComplex& delta);

/// Complex on the n x n grid (vertex i*n+j for cell (i,j), 0-based) whose
/// non-faces are the leading terms of the Groebner basis of the radical of
/// the 2x2 sub-permanent ideal: {(i,j),(k,l)} with i<k, j<l, and the five
/// families of square-free cubics. Requires 2 <= n <= 8.
SimplicialComplex perm2_complex(int n);

}  // namespace permres
