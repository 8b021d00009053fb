#include "permres/ideal.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace permres {

std::string to_string(Family family) {
    switch (family) {
        case Family::subpermanents: return "subpermanents";
        case Family::minors: return "minors";
        case Family::squarefree: return "squarefree";
    }
    return "unknown";
}

Family parse_family(const std::string& text) {
    if (text == "subpermanents" || text == "perm" || text == "permanents") return Family::subpermanents;
    if (text == "minors" || text == "det") return Family::minors;
    if (text == "squarefree" || text == "sqfree") return Family::squarefree;
    throw std::invalid_argument("unknown ideal family: " + text);
}

void IdealSpec::validate() const {
    if (n < 1) throw std::invalid_argument("n must be positive");
    if (kappa < 1 || kappa > n) throw std::invalid_argument("kappa must satisfy 1 <= kappa <= n");
}

Ring IdealSpec::ring() const { return family == Family::squarefree ? Ring::flat(n) : Ring::grid(n); }

BigInt IdealSpec::generator_count() const {
    const BigInt c = binomial(n, kappa);
    return family == Family::squarefree ? c : c * c;
}

std::string IdealSpec::to_string() const {
    return permres::to_string(family) + "(n=" + std::to_string(n) + ",kappa=" + std::to_string(kappa) + ")";
}

void SubmatrixSelector::validate(int n) const {
    if (rows.size() != cols.size()) throw std::invalid_argument("selector must be square");
    for (int r : rows) {
        if (r < 0 || r >= n) throw std::invalid_argument("selector row out of range");
    }
    for (int c : cols) {
        if (c < 0 || c >= n) throw std::invalid_argument("selector column out of range");
    }
}

bool SubmatrixSelector::distinct() const {
    return std::set<int>(rows.begin(), rows.end()).size() == rows.size() &&
           std::set<int>(cols.begin(), cols.end()).size() == cols.size();
}

std::vector<std::vector<int>> subsets(int n, int k) {
    std::vector<std::vector<int>> out;
    if (k < 0 || k > n) return out;
    std::vector<int> cur(static_cast<std::size_t>(k));
    std::iota(cur.begin(), cur.end(), 0);
    while (true) {
        out.push_back(cur);
        int i = k - 1;
        while (i >= 0 && cur[static_cast<std::size_t>(i)] == n - k + i) --i;
        if (i < 0) break;
        ++cur[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j) cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)] + 1;
    }
    return out;
}

namespace {

int permutation_sign(const std::vector<int>& perm) {
    int inversions = 0;
    for (std::size_t i = 0; i < perm.size(); ++i) {
        for (std::size_t j = i + 1; j < perm.size(); ++j) inversions += perm[i] > perm[j];
    }
    return inversions % 2 ? -1 : 1;
}

std::vector<int> without_position(const std::vector<int>& v, std::size_t pos) {
    std::vector<int> out(v);
    out.erase(out.begin() + static_cast<std::ptrdiff_t>(pos));
    return out;
}

}  // namespace

TensorElement submatrix_polynomial(const Ring& ring, const SubmatrixSelector& sel, SignMode mode) {
    if (ring.layout() != Ring::Layout::grid) throw std::invalid_argument("submatrix_polynomial needs a grid ring");
    sel.validate(ring.n());
    const int k = sel.size();
    TensorElement out(k, 0);
    std::vector<int> perm(static_cast<std::size_t>(k));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        std::vector<int> vars;
        vars.reserve(perm.size());
        for (int a = 0; a < k; ++a) {
            vars.push_back(ring.var(sel.rows[static_cast<std::size_t>(a)],
                                    sel.cols[static_cast<std::size_t>(perm[static_cast<std::size_t>(a)])]));
        }
        const int sign = mode == SignMode::determinant ? permutation_sign(perm) : 1;
        out.add(Monomial::from_vars(std::move(vars)), {}, sign);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

std::vector<TensorElement> expand_generators(const IdealSpec& spec) {
    spec.validate();
    const Ring ring = spec.ring();
    std::vector<TensorElement> out;
    if (spec.family == Family::squarefree) {
        for (const auto& s : subsets(spec.n, spec.kappa)) {
            TensorElement g(spec.kappa, 0);
            g.add(Monomial::from_vars(s), {}, 1);
            out.push_back(std::move(g));
        }
        return out;
    }
    const SignMode mode = spec.family == Family::minors ? SignMode::determinant : SignMode::permanent;
    const auto sets = subsets(spec.n, spec.kappa);
    for (const auto& rows : sets) {
        for (const auto& cols : sets) out.push_back(submatrix_polynomial(ring, {rows, cols}, mode));
    }
    return out;
}

TensorElement tensor_laplace(const Ring& ring, const SubmatrixSelector& sel, Axis axis, int index, SignMode mode) {
    sel.validate(ring.n());
    const auto& line = axis == Axis::row ? sel.rows : sel.cols;
    auto it = std::find(line.begin(), line.end(), index);
    if (it == line.end()) throw std::invalid_argument("expansion index is not part of the selector");
    const auto pos = static_cast<std::size_t>(it - line.begin());
    const int k = sel.size();
    TensorElement out(k - 1, 1);
    for (std::size_t beta = 0; beta < static_cast<std::size_t>(k); ++beta) {
        SubmatrixSelector minor;
        int var = 0;
        if (axis == Axis::row) {
            minor = {without_position(sel.rows, pos), without_position(sel.cols, beta)};
            var = ring.var(sel.rows[pos], sel.cols[beta]);
        } else {
            minor = {without_position(sel.rows, beta), without_position(sel.cols, pos)};
            var = ring.var(sel.rows[beta], sel.cols[pos]);
        }
        const int sign = (mode == SignMode::determinant && (pos + beta) % 2 == 1) ? -1 : 1;
        const TensorElement m = submatrix_polynomial(ring, minor, mode);
        for (const auto& [term, c] : m.terms()) out.add(term.mono, {var}, sign * c);
    }
    return out;
}

TensorElement det_hw_syzygy(const Ring& ring, int r, int p, int q) {
    if (ring.layout() != Ring::Layout::grid) throw std::invalid_argument("det_hw_syzygy needs a grid ring");
    if (r < 1 || p < 0 || q < 0) throw std::invalid_argument("det_hw_syzygy needs r >= 1, p >= 0, q >= 0");
    const int row_span = r + q + 1;
    const int col_span = r + p + 1;
    if (row_span > ring.n() || col_span > ring.n()) {
        throw std::invalid_argument("det_hw_syzygy: r+q+1 and r+p+1 must not exceed n");
    }
    TensorElement out(r + 1, p + q);
    for (const auto& I : subsets(row_span, q)) {
        for (const auto& J : subsets(col_span, p)) {
            // 1-based label sums decide the sign.
            int label_sum = static_cast<int>(I.size() + J.size());
            for (int i : I) label_sum += i;
            for (int j : J) label_sum += j;
            const int sign = label_sum % 2 ? -1 : 1;

            SubmatrixSelector minor;
            for (int a = 0; a < row_span; ++a) {
                if (std::find(I.begin(), I.end(), a) == I.end()) minor.rows.push_back(a);
            }
            for (int b = 0; b < col_span; ++b) {
                if (std::find(J.begin(), J.end(), b) == J.end()) minor.cols.push_back(b);
            }
            std::vector<int> wedge;
            for (int j : J) wedge.push_back(ring.var(0, j));
            for (int i : I) wedge.push_back(ring.var(i, 0));

            const TensorElement m = submatrix_polynomial(ring, minor, SignMode::determinant);
            for (const auto& [term, c] : m.terms()) out.add(term.mono, wedge, sign * c);
        }
    }
    return out;
}

TensorElement monomial_syzygy(const Ring& ring, const std::vector<int>& base, const std::vector<int>& tail) {
    if (tail.empty()) throw std::invalid_argument("monomial_syzygy needs a nonempty tail");
    std::set<int> seen;
    for (int v : base) {
        if (v < 0 || v >= ring.num_vars() || !seen.insert(v).second) {
            throw std::invalid_argument("monomial_syzygy: base indices must be distinct and in range");
        }
    }
    for (int v : tail) {
        if (v < 0 || v >= ring.num_vars() || !seen.insert(v).second) {
            throw std::invalid_argument("monomial_syzygy: base and tail must be disjoint, without repeats");
        }
    }
    const Monomial xb = Monomial::from_vars(base);
    const int j = static_cast<int>(tail.size());
    TensorElement out(xb.degree() + 1, j - 1);
    for (std::size_t a = 0; a < tail.size(); ++a) {
        const int sign = a % 2 == 0 ? 1 : -1;
        out.add(xb.times(tail[a]), without_position(tail, a), sign);
    }
    return out;
}

std::vector<TensorElement> permanental_laplace_differences(const Ring& ring, int kappa) {
    std::vector<TensorElement> out;
    const auto sets = subsets(ring.n(), kappa + 1);
    for (const auto& rows : sets) {
        for (const auto& cols : sets) {
            const SubmatrixSelector sel{rows, cols};
            const auto first_row = tensor_laplace(ring, sel, Axis::row, rows[0], SignMode::permanent);
            for (std::size_t j = 1; j < rows.size(); ++j) {
                out.push_back(first_row - tensor_laplace(ring, sel, Axis::row, rows[j], SignMode::permanent));
            }
            const auto first_col = tensor_laplace(ring, sel, Axis::column, cols[0], SignMode::permanent);
            for (std::size_t j = 1; j < cols.size(); ++j) {
                out.push_back(first_col - tensor_laplace(ring, sel, Axis::column, cols[j], SignMode::permanent));
            }
        }
    }
    return out;
}

}  // namespace permres
