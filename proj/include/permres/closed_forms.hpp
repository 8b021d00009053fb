#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "permres/bigint.hpp"

namespace permres {

/// A formula value with the tag and parameters that produced it.
struct FormulaResult {
    BigInt value;
    std::string formula_id;
    std::map<std::string, std::int64_t> inputs;

    bool operator==(const FormulaResult&) const = default;
};

// Sub-permanents.

/// C(n, kappa+j-1)^2 * C(2(kappa+j-2), j-1): linear-strand generators at step
/// j-1 (j = 1 is the generators). Zero once kappa+j-1 > n.
BigInt perm_linear_strand_dim(int n, int kappa, int j);

/// The same number assembled from its symmetric-group decomposition: for each
/// a+b = j-1, the module [kappa+b,1^a] (x) [kappa+a,1^b], trivial on the
/// complementary factors, induced up to S_n x S_n.
BigInt perm_linear_strand_induced(int n, int kappa, int j);

/// dim I_t for the ideal of 2x2 sub-permanents of an n x n matrix.
BigInt perm2_ideal_hilbert(int n, int t);

/// [f_0, ..., f_n]: face counts of the complex whose Stanley-Reisner ring is
/// the reduced quotient by the 2x2 sub-permanents.
std::vector<BigInt> perm2_f_vector(int n);

/// sum_i f_i C(t-1, i).
BigInt perm2_hilbert_polynomial(int n, int t);

/// dim (S/I)_t for the 2x2 sub-permanents.
BigInt perm2_quotient_hilbert(int n, int t);

// Square-free monomials of degree kappa in n variables.

/// Degree-d monomials with at least kappa distinct variables:
/// sum_{s=kappa}^{min(d,n)} C(n,s) C(d-1,s-1).
BigInt sqfree_ideal_hilbert(int n, int kappa, int d);

/// The printed variant sum_{j=0}^{n-kappa} C(n,kappa-j) C(kappa+t-1,kappa+j-1)
/// with t = d - kappa. Disagrees with the monomial count, e.g. at (3,2,3).
BigInt sqfree_ideal_hilbert_verbatim(int n, int kappa, int d);

/// 1 for d = 0, otherwise sum_{j=0}^{kappa-2} C(n,j+1) C(d-1,j).
BigInt sqfree_quotient_hilbert(int n, int kappa, int d);

/// The printed variant with upper limit n-kappa-2 for d >= n-kappa-1 and the
/// full count C(n+d-1,n-1) below. Disagrees with the monomial count, e.g. at (3,2,1).
BigInt sqfree_quotient_hilbert_verbatim(int n, int kappa, int d);

/// b_{i,kappa+i} = C(n,kappa+i) C(kappa-1+i,i); the resolution is linear.
BigInt sqfree_betti(int n, int kappa, int i);

/// C(kappa+j-1,j) C(n,kappa+j), the dimension as printed next to M_j. It is
/// sqfree_betti(n,kappa,j), i.e. step j rather than step j-1.
BigInt sqfree_module_dim_verbatim(int n, int kappa, int j);

// Minors.

/// sum_{a+b=j-1} dim S_{(a+1,1^{r+b})} C^n * dim S_{(b+1,1^{r+a})} C^n: the
/// linear strand of the (r+1)-minors at step j-1.
BigInt det_linear_strand_dim(int n, int r, int j);

/// 2 kappa (n+1)/(n-kappa) C(n,kappa+1)^2, the linear first syzygies of the
/// kappa-minors. Requires kappa < n.
BigInt det_linear_syzygies(int n, int kappa);

/// Evaluate a formula by tag. Recognized tags are the function names above;
/// parameters are looked up by name ("n", "kappa", "j", "t", "d", "i", "r").
/// Throws std::invalid_argument for unknown tags or missing parameters.
FormulaResult evaluate_formula(const std::string& formula_id, const std::map<std::string, std::int64_t>& inputs);

/// Tags accepted by evaluate_formula.
std::vector<std::string> formula_ids();

}  // namespace permres
