#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "permres/monomial.hpp"

namespace permres {

/// Basis element m (x) w of S^d V (x) Lambda^p V.
struct TensorTerm {
    Monomial mono;
    Wedge wedge;

    bool operator==(const TensorTerm&) const = default;
    bool operator<(const TensorTerm& other) const {
        if (wedge != other.wedge) return wedge < other.wedge;
        return mono < other.mono;
    }
};

/// Sparse element of S^d V (x) Lambda^p V with exact integer coefficients.
///
/// Wedges are kept sorted with the permutation sign folded into the
/// coefficient, and zero coefficients are never stored. With p = 0 this is
/// just a homogeneous polynomial of degree d.
class TensorElement {
public:
    TensorElement(int degree, int rank) : degree_(degree), rank_(rank) {}

    /// Adds coeff * m (x) (v_1 ^ ... ^ v_p) with the wedge factors in the given
    /// order. A repeated factor contributes nothing.
    void add(const Monomial& m, const std::vector<int>& wedge_factors, std::int64_t coeff);
    void add(const TensorTerm& term, std::int64_t coeff);

    int degree() const { return degree_; }
    int rank() const { return rank_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const std::map<TensorTerm, std::int64_t>& terms() const { return terms_; }
    std::int64_t coefficient(const TensorTerm& term) const;

    TensorElement& operator+=(const TensorElement& other);
    TensorElement& operator-=(const TensorElement& other);
    TensorElement& operator*=(std::int64_t scalar);

    /// True when every term has the same torus weight; that weight is stored in `out`.
    bool weight_homogeneous(const Ring& ring, Weight& out) const;

    std::string to_string(const Ring& ring) const;

    bool operator==(const TensorElement&) const = default;

private:
    void check_shape(const TensorElement& other) const;
    int degree_;
    int rank_;
    std::map<TensorTerm, std::int64_t> terms_;
};

inline TensorElement operator+(TensorElement a, const TensorElement& b) { return a += b; }
inline TensorElement operator-(TensorElement a, const TensorElement& b) { return a -= b; }

/// Multiplies the symmetric factor of every term by `m`.
TensorElement multiply(const TensorElement& x, const Monomial& m);

/// Multiplies a rank-0 element (a polynomial) into the symmetric factor of `x`.
TensorElement multiply(const TensorElement& x, const TensorElement& polynomial);

/// Transpose of the Koszul derivative, S^{q-1} (x) Lambda^{k} -> S^q (x) Lambda^{k-1}:
/// polarize one wedge factor out (with alternating sign) and multiply it into
/// the symmetric factor. On rank 1 this is the multiplication map S^{q-1} (x) V -> S^q.
/// Throws std::invalid_argument for rank 0 input.
TensorElement koszul_transpose(const TensorElement& x);

}  // namespace permres
