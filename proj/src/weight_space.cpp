#include "weight_space.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "permres/partitions.hpp"

namespace permres::detail {

namespace {

void compositions_rec(int remaining, int parts, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (parts == 1) {
        cur.push_back(remaining);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (int v = remaining; v >= 0; --v) {
        cur.push_back(v);
        compositions_rec(remaining - v, parts - 1, cur, out);
        cur.pop_back();
    }
}

BigInt orbit_size(const std::vector<int>& values) {
    std::map<int, int> mult;
    for (int v : values) ++mult[v];
    BigInt out = factorial(static_cast<std::int64_t>(values.size()));
    for (const auto& [v, m] : mult) out /= factorial(m);
    return out;
}

bool fits_below(const Weight& small, const Weight& big) {
    for (std::size_t i = 0; i < small.size(); ++i) {
        if (small[i] > big[i]) return false;
    }
    return true;
}

}  // namespace

std::vector<std::vector<int>> compositions(int total, int parts) {
    std::vector<std::vector<int>> out;
    if (parts <= 0 || total < 0) return out;
    std::vector<int> cur;
    compositions_rec(total, parts, cur, out);
    return out;
}

WeightSpaceEngine::WeightSpaceEngine(const IdealSpec& spec, const PrimeField& field, const ResourceLimits& limits)
    : spec_(spec), ring_(spec.ring()), field_(field), limits_(limits) {
    spec_.validate();
    for (const auto& g : expand_generators(spec_)) {
        Generator gen;
        if (!g.weight_homogeneous(ring_, gen.weight)) throw std::logic_error("generator is not a weight vector");
        for (const auto& [term, c] : g.terms()) gen.terms.emplace_back(term.mono, c);
        generators_.push_back(std::move(gen));
    }
}

void WeightSpaceEngine::charge(std::uint64_t amount) {
    used_ += amount;
    if (!limits_.expensive && used_ > limits_.max_nonzeros) {
        throw ResourceCapError("matrix nonzeros exceed cap", used_, limits_.max_nonzeros);
    }
}

int WeightSpaceEngine::degree_of(const Weight& w) const {
    return std::accumulate(w.begin(), w.begin() + ring_.n(), 0);
}

Weight WeightSpaceEngine::minus(const Weight& w, const Wedge& wedge) const {
    Weight wt(static_cast<std::size_t>(ring_.weight_dims()), 0);
    wedge.add_weight(ring_, wt);
    Weight out(w);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] -= wt[i];
    return out;
}

std::vector<Monomial> WeightSpaceEngine::monomials_of_weight(const Weight& w) const {
    const int n = ring_.n();
    if (ring_.layout() == Ring::Layout::flat) {
        for (int v : w) {
            if (v < 0) return {};
        }
        return {Monomial::from_exponents(w)};
    }
    std::vector<int> rows(w.begin(), w.begin() + n);
    std::vector<int> cols(w.begin() + n, w.end());
    if (std::accumulate(rows.begin(), rows.end(), 0) != std::accumulate(cols.begin(), cols.end(), 0)) return {};
    for (int v : w) {
        if (v < 0) return {};
    }

    std::vector<Monomial> out;
    std::vector<int> exps(static_cast<std::size_t>(n * n), 0);
    // Fill the table row by row; the last row is forced by the column sums.
    auto fill = [&](auto&& self, int r, int c, int row_left) -> void {
        if (r == n - 1) {
            for (int cc = 0; cc < n; ++cc) exps[static_cast<std::size_t>(r * n + cc)] = cols[static_cast<std::size_t>(cc)];
            out.push_back(Monomial::from_exponents(exps));
            return;
        }
        if (c == n - 1) {
            if (row_left > cols[static_cast<std::size_t>(c)]) return;
            exps[static_cast<std::size_t>(r * n + c)] = row_left;
            cols[static_cast<std::size_t>(c)] -= row_left;
            self(self, r + 1, 0, rows[static_cast<std::size_t>(r + 1)]);
            cols[static_cast<std::size_t>(c)] += row_left;
            return;
        }
        const int top = std::min(row_left, cols[static_cast<std::size_t>(c)]);
        for (int v = top; v >= 0; --v) {
            exps[static_cast<std::size_t>(r * n + c)] = v;
            cols[static_cast<std::size_t>(c)] -= v;
            self(self, r, c + 1, row_left - v);
            cols[static_cast<std::size_t>(c)] += v;
        }
        exps[static_cast<std::size_t>(r * n + c)] = 0;
    };
    if (n == 1) {
        out.push_back(Monomial::from_exponents({rows[0]}));
    } else {
        fill(fill, 0, 0, rows[0]);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Wedge> WeightSpaceEngine::wedges_below(const Weight& w, int k) const {
    std::vector<Wedge> out;
    if (k < 0) return out;
    std::vector<int> candidates;
    for (int v = 0; v < ring_.num_vars(); ++v) {
        const int rc = ring_.row_coord(v);
        const int cc = ring_.col_coord(v);
        if (w[static_cast<std::size_t>(rc)] > 0 && (cc < 0 || w[static_cast<std::size_t>(cc)] > 0)) candidates.push_back(v);
    }
    Weight left(w);
    std::vector<int> chosen;
    auto pick = [&](auto&& self, std::size_t from) -> void {
        if (static_cast<int>(chosen.size()) == k) {
            Wedge wedge;
            int sign = 1;
            Wedge::normalize(chosen, wedge, sign);
            out.push_back(std::move(wedge));
            return;
        }
        const std::size_t need = static_cast<std::size_t>(k) - chosen.size();
        for (std::size_t i = from; i + need <= candidates.size(); ++i) {
            const int v = candidates[i];
            const auto rc = static_cast<std::size_t>(ring_.row_coord(v));
            const int cc = ring_.col_coord(v);
            if (left[rc] == 0 || (cc >= 0 && left[static_cast<std::size_t>(cc)] == 0)) continue;
            --left[rc];
            if (cc >= 0) --left[static_cast<std::size_t>(cc)];
            chosen.push_back(v);
            self(self, i + 1);
            chosen.pop_back();
            ++left[rc];
            if (cc >= 0) ++left[static_cast<std::size_t>(cc)];
        }
    };
    pick(pick, 0);
    return out;
}

const Piece& WeightSpaceEngine::piece(const Weight& w) {
    if (auto it = pieces_.find(w); it != pieces_.end()) return *it->second;

    auto p = std::make_unique<Piece>();
    p->monomials = monomials_of_weight(w);
    const std::size_t size = p->monomials.size();
    for (std::uint32_t i = 0; i < size; ++i) p->index.emplace(p->monomials[i], i);

    std::vector<SparseVector> rows;
    if (degree_of(w) >= spec_.kappa) {
        for (const auto& g : generators_) {
            if (!fits_below(g.weight, w)) continue;
            Weight rest(w);
            for (std::size_t i = 0; i < rest.size(); ++i) rest[i] -= g.weight[i];
            for (const auto& m : monomials_of_weight(rest)) {
                SparseVector row;
                row.reserve(g.terms.size());
                for (const auto& [gm, c] : g.terms) row.emplace_back(p->index.at(gm.times(m)), field_.from_int(c));
                std::sort(row.begin(), row.end());
                rows.push_back(std::move(row));
            }
        }
    }
    std::stable_sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });

    Echelon ech(field_, size);
    std::uint64_t nnz = 0;
    for (const auto& row : rows) {
        nnz += row.size();
        ech.insert(row);
    }
    charge(nnz);
    ech.make_reduced();
    p->ideal_dim = ech.rank();

    std::vector<std::uint32_t> std_pos(size, 0);
    for (std::uint32_t i = 0; i < size; ++i) {
        if (!ech.is_pivot(i)) {
            std_pos[i] = static_cast<std::uint32_t>(p->standard.size());
            p->standard.push_back(i);
        }
    }
    p->normal_form.resize(size);
    for (std::uint32_t i = 0; i < size; ++i) {
        if (!ech.is_pivot(i)) {
            p->normal_form[i] = {{std_pos[i], 1u}};
            continue;
        }
        const SparseVector& row = ech.pivot_row(i);
        SparseVector nf;
        nf.reserve(row.size() - 1);
        for (std::size_t e = 1; e < row.size(); ++e) {
            if (ech.is_pivot(row[e].first)) throw std::logic_error("echelon form is not reduced");
            nf.emplace_back(std_pos[row[e].first], field_.neg(row[e].second));
        }
        p->normal_form[i] = std::move(nf);
    }
    const Piece& ref = *p;
    pieces_.emplace(w, std::move(p));
    return ref;
}

std::vector<WeightSpaceEngine::Block> WeightSpaceEngine::layout(const Weight& w, int k, std::uint32_t& total) {
    std::vector<Block> out;
    total = 0;
    const int d = degree_of(w);
    if (k < 0 || k > d || k > ring_.num_vars()) return out;
    for (auto& wedge : wedges_below(w, k)) {
        const Piece& p = piece(minus(w, wedge));
        if (p.quotient_dim() == 0) continue;
        out.push_back({std::move(wedge), &p, total});
        total += static_cast<std::uint32_t>(p.quotient_dim());
    }
    return out;
}

std::size_t WeightSpaceEngine::chain_dim(const Weight& w, int k) {
    std::uint32_t total = 0;
    layout(w, k, total);
    return total;
}

std::size_t WeightSpaceEngine::koszul_rank(const Weight& w, int k) {
    if (k <= 0) return 0;
    const auto key = std::make_pair(w, k);
    if (auto it = ranks_.find(key); it != ranks_.end()) return it->second;

    std::uint32_t domain_dim = 0;
    std::uint32_t codomain_dim = 0;
    const auto domain = layout(w, k, domain_dim);
    const auto codomain = layout(w, k - 1, codomain_dim);
    std::size_t rank = 0;
    if (domain_dim > 0 && codomain_dim > 0) {
        std::map<std::string, const Block*> target;
        for (const auto& b : codomain) target.emplace(b.wedge.key(), &b);

        std::vector<SparseVector> rows;
        rows.reserve(domain_dim);
        std::uint64_t nnz = 0;
        for (const auto& b : domain) {
            for (std::uint32_t s : b.piece->standard) {
                const Monomial& mono = b.piece->monomials[s];
                SparseVector row;
                for (int a = 0; a < k; ++a) {
                    const Wedge rest = b.wedge.without(static_cast<std::size_t>(a));
                    auto it = target.find(rest.key());
                    if (it == target.end()) continue;
                    const Block& tb = *it->second;
                    const SparseVector& nf = tb.piece->normal_form[tb.piece->index.at(mono.times(b.wedge.var_at(static_cast<std::size_t>(a))))];
                    const bool negate = a % 2 == 1;
                    for (auto [col, val] : nf) row.emplace_back(tb.offset + col, negate ? field_.neg(val) : val);
                }
                std::sort(row.begin(), row.end());
                nnz += row.size();
                rows.push_back(std::move(row));
            }
        }
        charge(nnz);
        std::stable_sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });
        Echelon ech(field_, codomain_dim);
        for (const auto& row : rows) {
            ech.insert(row);
            if (ech.rank() == codomain_dim) break;
        }
        rank = ech.rank();
    }
    ranks_.emplace(key, rank);
    return rank;
}

std::size_t WeightSpaceEngine::koszul_homology(const Weight& w, int k) {
    const std::size_t dim = chain_dim(w, k);
    if (dim == 0) return 0;
    return dim - koszul_rank(w, k) - koszul_rank(w, k + 1);
}

std::vector<WeightOrbit> WeightSpaceEngine::weights_of_degree(int degree, bool symmetric) const {
    std::vector<WeightOrbit> out;
    const int n = ring_.n();
    if (degree < 0) return out;
    if (!symmetric) {
        const auto comps = compositions(degree, n);
        if (ring_.layout() == Ring::Layout::flat) {
            for (const auto& c : comps) out.push_back({c, 1});
            return out;
        }
        for (const auto& r : comps) {
            for (const auto& c : comps) {
                Weight w(r);
                w.insert(w.end(), c.begin(), c.end());
                out.push_back({std::move(w), 1});
            }
        }
        return out;
    }
    std::vector<std::vector<int>> reps;
    for (const auto& pi : partitions_of(degree, n)) reps.push_back(pi.padded(n));
    if (ring_.layout() == Ring::Layout::flat) {
        for (const auto& r : reps) out.push_back({r, orbit_size(r)});
        return out;
    }
    // Transposing the matrix preserves all matrix families, so (a, b) and
    // (b, a) contribute equally.
    for (const auto& r : reps) {
        for (const auto& c : reps) {
            if (c < r) continue;
            Weight w(r);
            w.insert(w.end(), c.begin(), c.end());
            BigInt size = orbit_size(r) * orbit_size(c);
            if (r != c) size *= 2;
            out.push_back({std::move(w), size});
        }
    }
    return out;
}

}  // namespace permres::detail
