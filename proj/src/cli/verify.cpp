#include "verify.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "permres/closed_forms.hpp"
#include "permres/ideal.hpp"
#include "permres/lascoux.hpp"
#include "permres/simplicial.hpp"
#include "permres/sparse.hpp"

namespace permres::cli {

namespace {

void push(std::vector<ResultRecord>& out, Json labels, const BigInt& formula, const BigInt& oracle) {
    ResultRecord r;
    r.labels = std::move(labels);
    r.formula = formula;
    r.oracle = oracle;
    r.settle();
    out.push_back(std::move(r));
}

// Same, for checks where the formula side is "no failures".
void push_failures(std::vector<ResultRecord>& out, Json labels, std::size_t failures) {
    push(out, std::move(labels), 0, BigInt(failures));
}

Json label(const std::string& suite, const std::string& check) { return {{"suite", suite}, {"check", check}}; }

void formulas(Context& ctx, std::vector<ResultRecord>& out) {
    const std::string S = "formulas";
    for (int n = 2; n <= 4; ++n) {
        const int top = (n == 4 && !ctx.expensive()) ? 5 : 6;
        for (int t = 2; t <= top; ++t) {
            auto l = label(S, "perm2_ideal_hilbert");
            l["n"] = n;
            l["t"] = t;
            push(out, l, perm2_ideal_hilbert(n, t), ctx.hilbert({Family::subpermanents, n, 2}, t));
        }
    }
    for (int n = 2; n <= 6; ++n) {
        for (int t = 0; t <= 8; ++t) {
            auto l = label(S, "perm2 ideal+quotient");
            l["n"] = n;
            l["t"] = t;
            push(out, l, perm2_ideal_hilbert(n, t) + perm2_quotient_hilbert(n, t), binomial(n * n + t - 1, t));
        }
    }
    for (int n = 1; n <= 5; ++n) {
        for (int k = 1; k <= n; ++k) {
            for (int d = k; d <= 6; ++d) {
                auto l = label(S, "sqfree_ideal_hilbert");
                l["n"] = n;
                l["kappa"] = k;
                l["d"] = d;
                push(out, l, sqfree_ideal_hilbert(n, k, d), ctx.hilbert({Family::squarefree, n, k}, d));
            }
            for (int i = 0; k + i <= n; ++i) {
                auto l = label(S, "sqfree_betti");
                l["n"] = n;
                l["kappa"] = k;
                l["i"] = i;
                push(out, l, sqfree_betti(n, k, i), ctx.betti({Family::squarefree, n, k}, i, k + i));
            }
        }
    }
    for (int n = 2; n <= 4; ++n) {
        for (int k = 2; k <= n; ++k) {
            for (int j = 1; j <= 2; ++j) {
                auto l = label(S, "perm_linear_strand_dim");
                l["n"] = n;
                l["kappa"] = k;
                l["j"] = j;
                push(out, l, perm_linear_strand_dim(n, k, j), ctx.betti({Family::subpermanents, n, k}, j - 1, k + j - 1));
            }
        }
        for (int r = 1; r <= 2 && r < n; ++r) {
            auto l = label(S, "det_linear_strand_dim");
            l["n"] = n;
            l["r"] = r;
            push(out, l, det_linear_strand_dim(n, r, 2), ctx.betti({Family::minors, n, r + 1}, 1, r + 2));
        }
    }
    {
        const IdealSpec spec{Family::subpermanents, 5, 3};
        auto l = label(S, "perm_linear_strand_dim");
        l["n"] = 5;
        l["kappa"] = 3;
        l["j"] = 2;
        push(out, l, perm_linear_strand_dim(5, 3, 2), ctx.betti(spec, 1, 4));
        if (ctx.expensive()) {
            auto m = label(S, "first syzygies of degree six");
            m["n"] = 5;
            m["kappa"] = 3;
            push(out, m, 5200, ctx.betti(spec, 1, 6));
        }
    }
    for (int n = 1; n <= 6; ++n) {
        for (int k = 1; k <= std::min(n, 4); ++k) {
            for (int j = 1; j <= 4; ++j) {
                auto l = label(S, "perm_linear_strand_induced");
                l["n"] = n;
                l["kappa"] = k;
                l["j"] = j;
                push(out, l, perm_linear_strand_dim(n, k, j), perm_linear_strand_induced(n, k, j));
            }
        }
    }
}

std::size_t span_rank(const std::vector<TensorElement>& xs, const PrimeField& field) {
    std::map<TensorTerm, std::uint32_t> col;
    IntSparseMatrix m;
    for (const auto& x : xs) {
        std::vector<std::pair<std::uint32_t, std::int64_t>> row;
        for (const auto& [term, c] : x.terms()) {
            row.push_back({col.emplace(term, static_cast<std::uint32_t>(col.size())).first->second, c});
        }
        std::sort(row.begin(), row.end());
        m.rows.push_back(std::move(row));
    }
    m.num_rows = m.rows.size();
    m.num_cols = col.size();
    return matrix_rank(m, field);
}

void syzygies(Context& ctx, std::vector<ResultRecord>& out) {
    const std::string S = "syzygies";
    for (int n = 2; n <= 4; ++n) {
        const Ring ring = Ring::grid(n);
        for (int r = 1; r <= 2; ++r) {
            for (int p = 0; p <= 3; ++p) {
                for (int q = 0; p + q <= 3; ++q) {
                    if (p + q == 0 || r + p + 1 > n || r + q + 1 > n) continue;
                    auto l = label(S, "det_hw_syzygy in kernel");
                    l["n"] = n;
                    l["r"] = r;
                    l["p"] = p;
                    l["q"] = q;
                    push(out, l, 0, BigInt(koszul_transpose(det_hw_syzygy(ring, r, p, q)).size()));
                }
            }
        }
        std::size_t bad = 0;
        for (int size = 1; size <= n; ++size) {
            for (const auto& rows : subsets(n, size)) {
                for (const auto& cols : subsets(n, size)) {
                    for (SignMode mode : {SignMode::determinant, SignMode::permanent}) {
                        const TensorElement whole = submatrix_polynomial(ring, {rows, cols}, mode);
                        for (int line = 0; line < size; ++line) {
                            bad += koszul_transpose(tensor_laplace(ring, {rows, cols}, Axis::row, rows[line], mode)) != whole;
                            bad += koszul_transpose(tensor_laplace(ring, {rows, cols}, Axis::column, cols[line], mode)) != whole;
                        }
                    }
                }
            }
        }
        auto l = label(S, "Laplace expansions multiply back");
        l["n"] = n;
        push_failures(out, l, bad);

        for (int k = 2; k < n && k <= 3; ++k) {
            const auto diffs = permanental_laplace_differences(ring, k);
            std::size_t outside = 0;
            for (const auto& d : diffs) outside += !koszul_transpose(d).is_zero();
            auto a = label(S, "permanental Laplace differences in kernel");
            a["n"] = n;
            a["kappa"] = k;
            push_failures(out, a, outside);
            auto b = label(S, "permanental Laplace differences span");
            b["n"] = n;
            b["kappa"] = k;
            push(out, b, perm_linear_strand_dim(n, k, 2), BigInt(span_rank(diffs, ctx.primes()[0])));
        }
    }
    for (int n = 2; n <= 5; ++n) {
        const Ring flat = Ring::flat(n);
        for (int j = 1; j <= 3; ++j) {
            std::size_t bad = 0, tested = 0;
            for (int k = 1; k + j <= n + 1; ++k) {
                for (const auto& base : subsets(n, k - 1)) {
                    for (const auto& tail : subsets(n, j)) {
                        if (std::any_of(tail.begin(), tail.end(), [&](int u) {
                                return std::find(base.begin(), base.end(), u) != base.end();
                            })) {
                            continue;
                        }
                        ++tested;
                        const TensorElement s = monomial_syzygy(flat, base, tail);
                        if (j == 1) {
                            bad += s.size() != 1;
                        } else {
                            bad += !koszul_transpose(s).is_zero();
                        }
                    }
                }
            }
            auto l = label(S, "monomial_syzygy in kernel");
            l["n"] = n;
            l["j"] = j;
            l["tested"] = tested;
            push_failures(out, l, bad);
        }
    }
}

void lascoux(Context& ctx, std::vector<ResultRecord>& out) {
    const std::string S = "lascoux";
    for (int n = 2; n <= 5; ++n) {
        for (int r = 1; r <= 3 && r < n; ++r) {
            const int len = (n - r) * (n - r);
            for (int j = 1; j <= 6; ++j) {
                const auto direct = lascoux_terms(n, r, j);
                const auto bott = resolution_via_bott(n, r, j);
                ResultRecord rec;
                rec.labels = label(S, "direct vs bott");
                rec.labels["n"] = n;
                rec.labels["r"] = r;
                rec.labels["j"] = j;
                rec.formula = total_dimension(direct);
                rec.oracle = total_dimension(bott);
                rec.settle(direct == bott);
                out.push_back(std::move(rec));
            }
            int last = 0;
            for (int j = 1; j <= len + 2; ++j) {
                if (!lascoux_terms(n, r, j).empty()) last = j;
            }
            auto l = label(S, "resolution length");
            l["n"] = n;
            l["r"] = r;
            push(out, l, len, last);

            std::size_t repeats = 0;
            for (int j = 1; j <= len; ++j) {
                std::set<std::pair<Partition, Partition>> seen;
                for (const auto& t : lascoux_terms(n, r, j)) repeats += !seen.insert({t.lambda_e, t.lambda_f}).second;
            }
            auto m = label(S, "multiplicity free");
            m["n"] = n;
            m["r"] = r;
            push_failures(out, m, repeats);

            if (n <= 4 && r <= 2) {
                for (int j = 1; j < len; ++j) {
                    auto g = label(S, "Gorenstein symmetry");
                    g["n"] = n;
                    g["r"] = r;
                    g["j"] = j;
                    push(out, g, total_dimension(lascoux_terms(n, r, j)), total_dimension(lascoux_terms(n, r, len - j)));
                }
            }
        }
    }
    for (int t = 0; t <= 6; ++t) {
        auto l = label(S, "alternating sum vs Hilbert function");
        l["n"] = 3;
        l["r"] = 1;
        l["t"] = t;
        push(out, l, *hilbert_formula({Family::minors, 3, 2}, t), ctx.hilbert({Family::minors, 3, 2}, t));
    }
}

std::vector<BigInt> poly_times(const std::vector<BigInt>& a, const std::vector<BigInt>& b) {
    std::vector<BigInt> r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    return r;
}

void simplicial(Context& ctx, std::vector<ResultRecord>& out) {
    const std::string S = "simplicial";
    for (int n = 2; n <= 5; ++n) {
        const auto f = perm2_f_vector(n);
        const auto counted = count_faces(perm2_complex(n), n);
        for (std::size_t i = 0; i < f.size(); ++i) {
            auto l = label(S, "perm2 f-vector");
            l["n"] = n;
            l["i"] = static_cast<int>(i);
            push(out, l, f[i], counted[i + 1]);
        }
    }
    for (int n = 2; n <= 6; ++n) {
        for (int k = 2; k <= n; ++k) {
            const auto delta = skeleton_complex(n, k - 2);
            // 1 - sum_i (-1)^i b_i t^{k+i} against h(t) (1-t)^{n-k+1}
            std::vector<BigInt> lhs(static_cast<std::size_t>(n + 2), 0);
            lhs[0] = 1;
            for (int i = 0; k + i <= n; ++i) {
                const BigInt b = sqfree_betti(n, k, i);
                lhs[static_cast<std::size_t>(k + i)] += i % 2 ? b : BigInt(-b);
            }
            auto rhs = h_vector(delta);
            for (int e = 0; e <= n - k; ++e) rhs = poly_times(rhs, {1, -1});
            rhs.resize(std::max(rhs.size(), lhs.size()), 0);
            lhs.resize(rhs.size(), 0);
            std::size_t differing = 0;
            for (std::size_t i = 0; i < lhs.size(); ++i) differing += lhs[i] != rhs[i];
            auto l = label(S, "h-vector is the Betti numerator");
            l["n"] = n;
            l["kappa"] = k;
            push_failures(out, l, differing);

            auto d = label(S, "dual of dual");
            d["n"] = n;
            d["kappa"] = k;
            push_failures(out, d, alexander_dual(alexander_dual(delta)).minimal_non_faces() != delta.minimal_non_faces());

            auto p = label(S, "dual pairs kappa with n-kappa+1");
            p["n"] = n;
            p["kappa"] = k;
            push_failures(out, p,
                          alexander_dual_ideal(delta) != stanley_reisner_generators(skeleton_complex(n, n - k - 1)));
        }
    }
    for (int n = 2; n <= 5; ++n) {
        for (int k = 2; k <= n; ++k) {
            const auto f = f_vector(skeleton_complex(n, k - 2));
            const IdealSpec spec{Family::squarefree, n, k};
            for (int t = 1; t <= 6; ++t) {
                BigInt faces = 0;
                for (std::size_t i = 1; i < f.size(); ++i) faces += f[i] * binomial(t - 1, static_cast<std::int64_t>(i) - 1);
                auto l = label(S, "face count vs quotient dimension");
                l["n"] = n;
                l["kappa"] = k;
                l["t"] = t;
                push(out, l, faces, ambient_dim(spec, t) - ctx.hilbert(spec, t));
            }
        }
    }
}

}  // namespace

void run_suite(const std::string& suite, Context& ctx, std::vector<ResultRecord>& out) {
    if (suite == "formulas" || suite == "all") formulas(ctx, out);
    if (suite == "syzygies" || suite == "all") syzygies(ctx, out);
    if (suite == "lascoux" || suite == "all") lascoux(ctx, out);
    if (suite == "simplicial" || suite == "all") simplicial(ctx, out);
}

}  // namespace permres::cli
