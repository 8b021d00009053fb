#include "permres/sparse.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace permres {

Echelon::Echelon(const PrimeField& field, std::size_t num_cols)
    : field_(field), pivot_row_(num_cols, kNone), scratch_(num_cols, 0), touched_(num_cols, 0) {}

SparseVector Echelon::eliminate(const SparseVector& v, bool stop_at_first_free) const {
    using MinHeap = std::priority_queue<std::uint32_t, std::vector<std::uint32_t>, std::greater<>>;
    MinHeap heap;
    std::vector<std::uint32_t> touched_list;
    touched_list.reserve(v.size() * 4);
    for (auto [col, val] : v) {
        if (col >= scratch_.size()) throw std::out_of_range("sparse vector column out of range");
        scratch_[col] = field_.add(scratch_[col], val);
        if (!touched_[col]) {
            touched_[col] = 1;
            touched_list.push_back(col);
            heap.push(col);
        }
    }
    SparseVector out;
    bool found_free = false;
    while (!heap.empty()) {
        const std::uint32_t col = heap.top();
        heap.pop();
        const std::uint32_t val = scratch_[col];
        if (val == 0) continue;
        if (found_free || pivot_row_[col] == kNone) {
            out.emplace_back(col, val);
            scratch_[col] = 0;
            if (stop_at_first_free) found_free = true;
            continue;
        }
        const SparseVector& prow = rows_[pivot_row_[col]];
        const std::uint32_t factor = field_.neg(val);
        for (auto [pc, pv] : prow) {
            scratch_[pc] = field_.add(scratch_[pc], field_.mul(factor, pv));
            if (!touched_[pc]) {
                touched_[pc] = 1;
                touched_list.push_back(pc);
                heap.push(pc);
            }
        }
    }
    for (std::uint32_t col : touched_list) {
        touched_[col] = 0;
        scratch_[col] = 0;
    }
    return out;
}

bool Echelon::insert(const SparseVector& row) {
    SparseVector reduced = eliminate(row, /*stop_at_first_free=*/true);
    if (reduced.empty()) return false;
    const std::uint32_t lead = reduced.front().first;
    const std::uint32_t inv = field_.inv(reduced.front().second);
    for (auto& entry : reduced) entry.second = field_.mul(entry.second, inv);
    nonzeros_ += reduced.size();
    pivot_row_[lead] = static_cast<std::uint32_t>(rows_.size());
    rows_.push_back(std::move(reduced));
    return true;
}

SparseVector Echelon::reduce(const SparseVector& v) const { return eliminate(v, /*stop_at_first_free=*/false); }

void Echelon::make_reduced() {
    std::vector<std::uint32_t> order(rows_.size());
    std::iota(order.begin(), order.end(), 0u);
    std::sort(order.begin(), order.end(),
              [&](std::uint32_t a, std::uint32_t b) { return rows_[a].front().first > rows_[b].front().first; });
    nonzeros_ = 0;
    // Rows with larger pivots are finished first, so every pivot appearing in a
    // tail is already fully reduced when it is used.
    for (std::uint32_t idx : order) {
        SparseVector& row = rows_[idx];
        SparseVector tail(row.begin() + 1, row.end());
        SparseVector reduced_tail = reduce(tail);
        SparseVector updated;
        updated.reserve(reduced_tail.size() + 1);
        updated.push_back(row.front());
        updated.insert(updated.end(), reduced_tail.begin(), reduced_tail.end());
        row = std::move(updated);
        nonzeros_ += row.size();
    }
}

namespace {

SparseVector to_field(const std::vector<std::pair<std::uint32_t, std::int64_t>>& v, const PrimeField& field) {
    SparseVector out;
    out.reserve(v.size());
    for (auto [c, x] : v) {
        const std::uint32_t r = field.from_int(x);
        if (r) out.emplace_back(c, r);
    }
    std::sort(out.begin(), out.end());
    // Merge duplicate columns.
    SparseVector merged;
    for (auto& e : out) {
        if (!merged.empty() && merged.back().first == e.first) {
            merged.back().second = field.add(merged.back().second, e.second);
            if (merged.back().second == 0) merged.pop_back();
        } else {
            merged.push_back(e);
        }
    }
    return merged;
}

std::size_t rank_of_vectors(const std::vector<std::vector<std::pair<std::uint32_t, std::int64_t>>>& vectors,
                            std::size_t dim, const PrimeField& field) {
    std::vector<std::size_t> order(vectors.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return vectors[a].size() < vectors[b].size(); });
    Echelon ech(field, dim);
    for (std::size_t i : order) ech.insert(to_field(vectors[i], field));
    return ech.rank();
}

}  // namespace

std::size_t matrix_rank(const IntSparseMatrix& m, const PrimeField& field) {
    if (m.rows.size() != m.num_rows) throw std::invalid_argument("row count mismatch");
    for (const auto& row : m.rows) {
        for (auto [c, x] : row) {
            if (c >= m.num_cols) throw std::invalid_argument("column index out of range");
        }
    }
    return rank_of_vectors(m.rows, m.num_cols, field);
}

std::size_t kernel_dim(const LinearMapSpec& map, const PrimeField& field) {
    if (map.images.size() != map.domain_dim) {
        throw std::invalid_argument("kernel_dim: expected one image per domain basis vector");
    }
    for (const auto& img : map.images) {
        for (auto [c, x] : img) {
            if (c >= map.codomain_dim) throw std::invalid_argument("kernel_dim: image index outside codomain");
        }
    }
    return map.domain_dim - rank_of_vectors(map.images, map.codomain_dim, field);
}

}  // namespace permres
