#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "permres/prime_field.hpp"

namespace permres {

/// Sparse vector over a prime field: (column, nonzero value) sorted by column.
using SparseVector = std::vector<std::pair<std::uint32_t, std::uint32_t>>;

/// Row echelon form built incrementally over F_p.
///
/// Each stored row is normalized to leading coefficient 1; its leading column
/// is its pivot. Reduction walks columns in increasing order using a dense
/// scratch accumulator and a heap of touched columns, so the cost scales with
/// fill-in rather than with the column count. Instances are not thread-safe.
class Echelon {
public:
    Echelon(const PrimeField& field, std::size_t num_cols);

    /// Reduces `row` against the current pivots and stores it if it is
    /// independent. Returns true when the rank grew.
    bool insert(const SparseVector& row);

    /// Eliminates every pivot column from `v`. The result lies in the span of
    /// non-pivot columns and equals v modulo the row space.
    SparseVector reduce(const SparseVector& v) const;

    /// Back-substitutes so that each stored row has zeros in all other pivot
    /// columns (reduced row echelon form).
    void make_reduced();

    std::size_t rank() const { return rows_.size(); }
    std::size_t num_cols() const { return pivot_row_.size(); }
    bool is_pivot(std::uint32_t col) const { return pivot_row_[col] != kNone; }
    /// Stored row whose pivot is `col`; only valid when is_pivot(col).
    const SparseVector& pivot_row(std::uint32_t col) const { return rows_[pivot_row_[col]]; }
    std::size_t nonzeros() const { return nonzeros_; }
    const PrimeField& field() const { return field_; }

private:
    static constexpr std::uint32_t kNone = 0xffffffffu;
    SparseVector eliminate(const SparseVector& v, bool stop_at_first_free) const;

    PrimeField field_;
    std::vector<std::uint32_t> pivot_row_;
    std::vector<SparseVector> rows_;
    std::size_t nonzeros_ = 0;
    mutable std::vector<std::uint32_t> scratch_;
    mutable std::vector<char> touched_;
};

/// Integer sparse matrix stored as a list of vectors (rows of the elimination).
struct IntSparseMatrix {
    std::size_t num_rows = 0;
    std::size_t num_cols = 0;
    std::vector<std::vector<std::pair<std::uint32_t, std::int64_t>>> rows;
};

/// Rank over F_p. Rows are inserted sparsest first, which keeps fill-in low.
std::size_t matrix_rank(const IntSparseMatrix& m, const PrimeField& field);

/// Linear map given by the images of the domain basis vectors, each expressed
/// in the codomain basis.
struct LinearMapSpec {
    std::size_t domain_dim = 0;
    std::size_t codomain_dim = 0;
    /// images[i] = image of domain basis vector i.
    std::vector<std::vector<std::pair<std::uint32_t, std::int64_t>>> images;
};

/// Nullity of the map over F_p: domain dimension minus rank. Throws
/// std::invalid_argument when the images are inconsistent with the dimensions.
std::size_t kernel_dim(const LinearMapSpec& map, const PrimeField& field);

}  // namespace permres
