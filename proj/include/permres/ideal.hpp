#pragma once

#include <string>
#include <vector>

#include "permres/bigint.hpp"
#include "permres/monomial.hpp"
#include "permres/tensor.hpp"

namespace permres {

enum class Family { subpermanents, minors, squarefree };

std::string to_string(Family family);
/// Accepts "subpermanents"/"perm", "minors"/"det", "squarefree"/"sqfree".
Family parse_family(const std::string& text);

/// Symbolic description of an ideal: the kappa x kappa sub-permanents or
/// minors of a generic n x n matrix, or the square-free monomials of degree
/// kappa in n variables.
struct IdealSpec {
    Family family = Family::subpermanents;
    int n = 1;
    int kappa = 1;

    /// Throws std::invalid_argument unless 1 <= kappa <= n.
    void validate() const;
    /// Grid ring for the matrix families, flat ring for square-free monomials.
    Ring ring() const;
    /// C(n, kappa)^2 for the matrix families, C(n, kappa) otherwise.
    BigInt generator_count() const;
    std::string to_string() const;

    bool operator==(const IdealSpec&) const = default;
};

enum class SignMode { determinant, permanent };
enum class Axis { row, column };

/// Rows and columns (0-based) of a square submatrix. Labels may repeat, which
/// is how tensor Laplace expansions with a repeated row or column are expressed.
struct SubmatrixSelector {
    std::vector<int> rows;
    std::vector<int> cols;

    int size() const { return static_cast<int>(rows.size()); }
    /// Throws std::invalid_argument unless rows and cols have equal size and
    /// every label lies in [0, n).
    void validate(int n) const;
    bool distinct() const;
};

/// Determinant or permanent of the selected submatrix of the generic matrix,
/// expanded into its size! permutation terms.
TensorElement submatrix_polynomial(const Ring& ring, const SubmatrixSelector& sel, SignMode mode);

/// Generators in a fixed order: row subsets outer, column subsets inner, both
/// lexicographic (subpermanents, minors); kappa-subsets in lexicographic order
/// (squarefree).
std::vector<TensorElement> expand_generators(const IdealSpec& spec);

/// Tensor Laplace expansion of the selected submatrix along the row (or
/// column) carrying label `index`, left unsummed in the second factor:
///   sum_beta sign * M(complement of the line and beta) (x) x_{line, beta}
/// as an element of S^{size-1} V (x) V. Multiplying the two factors gives the
/// determinant (or permanent) of the selected submatrix. When the label is
/// repeated the first occurrence is used. Throws std::invalid_argument when
/// `index` is not in the selector.
TensorElement tensor_laplace(const Ring& ring, const SubmatrixSelector& sel, Axis axis, int index, SignMode mode);

/// Highest weight vector of S_{p+1,1^{r+q}} E (x) S_{q+1,1^{r+p}} F in the linear
/// strand of the ideal of (r+1)-minors:
///   sum_{I,J} (-1)^{sum I + sum J} M^{[r+q+1]\I}_{[r+p+1]\J}
///       (x) x^1_{j_1} ^ ... ^ x^1_{j_p} ^ x^{i_1}_1 ^ ... ^ x^{i_q}_1
/// over I in [r+q+1] of size q and J in [r+p+1] of size p (1-based labels).
/// Lies in S^{r+1} V (x) Lambda^{p+q} V. Throws std::invalid_argument when
/// r+q+1 > n or r+p+1 > n.
TensorElement det_hw_syzygy(const Ring& ring, int r, int p, int q);

/// For disjoint base I and tail (u_1, ..., u_j) of a flat ring:
///   sum_a (-1)^{a+1} x_I x_{u_a} (x) x_{u_1} ^ ... ^ (omit u_a) ^ ... ^ x_{u_j}
/// in S^{|I|+1} V (x) Lambda^{j-1} V. Throws std::invalid_argument on
/// overlapping or repeated indices or an empty tail.
TensorElement monomial_syzygy(const Ring& ring, const std::vector<int>& base, const std::vector<int>& tail);

/// Spanning family of the linear syzygies among kappa x kappa sub-permanents:
/// for every (kappa+1)-submatrix, the permanental expansion along its first
/// row minus the one along row j (j = 2..kappa+1), then the same for columns.
std::vector<TensorElement> permanental_laplace_differences(const Ring& ring, int kappa);

/// All k-subsets of {0, ..., n-1} in lexicographic order.
std::vector<std::vector<int>> subsets(int n, int k);

}  // namespace permres
