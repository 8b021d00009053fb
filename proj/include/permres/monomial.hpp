#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace permres {

/// Variables of the polynomial ring together with their torus weights.
///
/// A grid ring has the n^2 matrix entries x^i_j (row-major index
/// (i-1)*n + (j-1)); x^i_j has weight e_i in the first n weight coordinates
/// and e_j in the last n. A flat ring has n variables x_i of weight e_i.
class Ring {
public:
    enum class Layout { grid, flat };

    static Ring grid(int n);
    static Ring flat(int n);

    Layout layout() const { return layout_; }
    int n() const { return n_; }
    int num_vars() const { return layout_ == Layout::grid ? n_ * n_ : n_; }
    int weight_dims() const { return layout_ == Layout::grid ? 2 * n_ : n_; }

    /// Variable index of x^row_col, both 0-based. Grid rings only.
    int var(int row, int col) const;
    /// (row, col) of a grid variable, 0-based.
    std::pair<int, int> cell(int var) const;

    /// Weight coordinates that `var` increments: one for flat, two for grid.
    int row_coord(int var) const { return layout_ == Layout::grid ? var / n_ : var; }
    int col_coord(int var) const { return layout_ == Layout::grid ? n_ + var % n_ : -1; }

    /// Human-readable name, "x12" for x^1_2 or "x3" for the flat ring.
    std::string var_name(int var) const;

    bool operator==(const Ring&) const = default;

private:
    Ring(Layout layout, int n);
    Layout layout_;
    int n_;
};

using Weight = std::vector<int>;

/// Commutative monomial stored as the sorted multiset of its variable indices.
///
/// Ordering is the deterministic basis order used everywhere: lexicographic on
/// exponent vectors, largest first, so x_0^d precedes every other monomial
/// of degree d.
class Monomial {
public:
    Monomial() = default;
    /// Builds from any multiset of variable indices (sorted internally).
    static Monomial from_vars(std::vector<int> vars);
    static Monomial from_exponents(const std::vector<int>& exponents);

    int degree() const { return static_cast<int>(vars_.size()); }
    int var_at(std::size_t i) const { return static_cast<unsigned char>(vars_[i]); }
    std::vector<int> vars() const;
    std::vector<int> exponents(int num_vars) const;
    int exponent(int var) const;

    Monomial times(int var) const;
    Monomial times(const Monomial& other) const;

    Weight weight(const Ring& ring) const;
    /// Accumulates this monomial's weight into `w`.
    void add_weight(const Ring& ring, Weight& w) const;

    std::string to_string(const Ring& ring) const;
    const std::string& key() const { return vars_; }

    bool operator==(const Monomial&) const = default;
    /// Exponent-lexicographic, larger exponent vectors first.
    bool operator<(const Monomial& other) const;

private:
    explicit Monomial(std::string vars) : vars_(std::move(vars)) {}
    std::string vars_;
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const { return std::hash<std::string>{}(m.key()); }
};

/// Strictly increasing set of variable indices; a basis wedge of an exterior power.
class Wedge {
public:
    Wedge() = default;

    /// Sorts `vars` and reports the sign of the sorting permutation through
    /// `sign`. A repeated variable gives the zero wedge: returns false.
    static bool normalize(std::vector<int> vars, Wedge& out, int& sign);

    int rank() const { return static_cast<int>(vars_.size()); }
    int var_at(std::size_t i) const { return static_cast<unsigned char>(vars_[i]); }
    std::vector<int> vars() const;
    Wedge without(std::size_t position) const;
    bool contains(int var) const;

    void add_weight(const Ring& ring, Weight& w) const;
    std::string to_string(const Ring& ring) const;
    const std::string& key() const { return vars_; }

    auto operator<=>(const Wedge&) const = default;
    bool operator==(const Wedge&) const = default;

private:
    std::string vars_;
};

/// All monomials of `degree` in `ring`, in basis order.
std::vector<Monomial> all_monomials(const Ring& ring, int degree);

}  // namespace permres
