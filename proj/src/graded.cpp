#include "permres/graded.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include "permres/bigint.hpp"
#include "permres/sparse.hpp"

namespace permres {

namespace {

void check_basis_cap(const Ring& ring, int d, std::uint64_t cap) {
    const BigInt count = binomial(ring.num_vars() + d - 1, d);
    if (count > cap) {
        throw ResourceCapError("degree too large for graded basis", count > BigInt(UINT64_MAX) ? UINT64_MAX : count.convert_to<std::uint64_t>(), cap);
    }
}

void check_generators(const std::vector<TensorElement>& generators, int from_degree, int to_degree) {
    if (to_degree < from_degree) throw std::invalid_argument("multiply_map_rank needs to_degree >= from_degree");
    for (const auto& g : generators) {
        if (g.rank() != 0) throw std::invalid_argument("generators must be polynomials (exterior rank 0)");
        if (g.degree() != from_degree) throw std::invalid_argument("generator degree differs from from_degree");
    }
}

void charge(std::uint64_t& used, std::uint64_t amount, const ResourceLimits& limits) {
    used += amount;
    if (!limits.expensive && used > limits.max_nonzeros) {
        throw ResourceCapError("matrix nonzeros exceed cap", used, limits.max_nonzeros);
    }
}

using IntRow = std::vector<std::pair<std::uint32_t, std::int64_t>>;

}  // namespace

std::vector<Monomial> graded_basis(const Ring& ring, int d, std::uint64_t cap) {
    if (d < 0) return {};
    check_basis_cap(ring, d, cap);
    return all_monomials(ring, d);
}

std::vector<Monomial> graded_basis(int n, int d, std::uint64_t cap) { return graded_basis(Ring::grid(n), d, cap); }

std::size_t multiply_map_rank_direct(const Ring& ring, const std::vector<TensorElement>& generators,
                                     int from_degree, int to_degree, const PrimeField& field,
                                     const ResourceLimits& limits) {
    check_generators(generators, from_degree, to_degree);
    const auto target = graded_basis(ring, to_degree, limits.max_basis);
    const auto shifts = graded_basis(ring, to_degree - from_degree, limits.max_basis);
    std::unordered_map<Monomial, std::uint32_t, MonomialHash> index;
    index.reserve(target.size());
    for (std::uint32_t i = 0; i < target.size(); ++i) index.emplace(target[i], i);

    IntSparseMatrix m;
    m.num_cols = target.size();
    std::uint64_t used = 0;
    for (const auto& g : generators) {
        for (const auto& s : shifts) {
            IntRow row;
            row.reserve(g.size());
            for (const auto& [term, c] : g.terms()) row.emplace_back(index.at(term.mono.times(s)), c);
            charge(used, row.size(), limits);
            m.rows.push_back(std::move(row));
        }
    }
    m.num_rows = m.rows.size();
    return matrix_rank(m, field);
}

std::size_t multiply_map_rank(const Ring& ring, const std::vector<TensorElement>& generators, int from_degree,
                              int to_degree, const PrimeField& field, const ResourceLimits& limits) {
    check_generators(generators, from_degree, to_degree);
    std::vector<Weight> gen_weights(generators.size());
    for (std::size_t i = 0; i < generators.size(); ++i) {
        if (!generators[i].weight_homogeneous(ring, gen_weights[i])) {
            return multiply_map_rank_direct(ring, generators, from_degree, to_degree, field, limits);
        }
    }
    check_basis_cap(ring, to_degree, limits.max_basis);
    const auto shifts = graded_basis(ring, to_degree - from_degree, limits.max_basis);

    // Bucket every product g*s by its weight; products of different weights
    // never share a monomial, so the rank is the sum of the block ranks.
    std::map<Weight, std::vector<std::pair<std::uint32_t, std::uint32_t>>> blocks;
    for (std::uint32_t gi = 0; gi < generators.size(); ++gi) {
        if (generators[gi].is_zero()) continue;
        for (std::uint32_t si = 0; si < shifts.size(); ++si) {
            Weight w = gen_weights[gi];
            shifts[si].add_weight(ring, w);
            blocks[std::move(w)].emplace_back(gi, si);
        }
    }

    std::uint64_t used = 0;
    std::size_t total = 0;
    for (const auto& [w, products] : blocks) {
        std::unordered_map<Monomial, std::uint32_t, MonomialHash> local;
        std::vector<IntRow> rows;
        rows.reserve(products.size());
        for (auto [gi, si] : products) {
            IntRow row;
            for (const auto& [term, c] : generators[gi].terms()) {
                const Monomial prod = term.mono.times(shifts[si]);
                auto [it, inserted] = local.try_emplace(prod, static_cast<std::uint32_t>(local.size()));
                row.emplace_back(it->second, c);
            }
            charge(used, row.size(), limits);
            rows.push_back(std::move(row));
        }
        IntSparseMatrix m;
        m.num_rows = rows.size();
        m.num_cols = local.size();
        m.rows = std::move(rows);
        total += matrix_rank(m, field);
    }
    return total;
}

}  // namespace permres
