#include "permres/closed_forms.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "permres/partitions.hpp"

namespace permres {

BigInt perm_linear_strand_dim(int n, int kappa, int j) {
    if (kappa < 1 || j < 1 || kappa + j - 1 > n) return 0;
    const BigInt c = binomial(n, kappa + j - 1);
    return c * c * binomial(2 * (kappa + j - 2), j - 1);
}

BigInt perm_linear_strand_induced(int n, int kappa, int j) {
    if (kappa < 1 || j < 1 || kappa + j - 1 > n) return 0;
    const int m = kappa + j - 1;
    const BigInt order_h = factorial(m) * factorial(n - m);
    const BigInt order_g = factorial(n);
    BigInt total = 0;
    for (int a = 0; a <= j - 1; ++a) {
        const int b = j - 1 - a;
        const BigInt dim_w = specht_dim(Partition::hook(kappa + b, a)) * specht_dim(Partition::hook(kappa + a, b));
        total += induced_dim(dim_w, order_h * order_h, order_g * order_g);
    }
    return total;
}

std::vector<BigInt> perm2_f_vector(int n) {
    if (n < 2) throw std::invalid_argument("perm2_f_vector needs n >= 2");
    const BigInt c2 = binomial(n, 2);
    std::vector<BigInt> f;
    f.push_back(BigInt(n) * n);
    f.push_back(binomial(static_cast<std::int64_t>(n) * n, 2) - c2 * c2);
    f.push_back(2 * c2 * c2 + 2 * n * binomial(n, 3));
    for (int i = 3; i <= n; ++i) f.push_back(2 * n * binomial(n, i + 1));
    return f;
}

BigInt perm2_hilbert_polynomial(int n, int t) {
    const auto f = perm2_f_vector(n);
    BigInt total = 0;
    for (std::size_t i = 0; i < f.size(); ++i) total += f[i] * binomial(t - 1, static_cast<std::int64_t>(i));
    return total;
}

BigInt perm2_ideal_hilbert(int n, int t) {
    if (n < 2) throw std::invalid_argument("perm2_ideal_hilbert needs n >= 2");
    if (t < 2) return 0;
    const BigInt c2 = binomial(n, 2);
    if (t == 2) return c2 * c2;
    const BigInt full = binomial(static_cast<std::int64_t>(n) * n + t - 1, t);
    BigInt bracket = BigInt(n) * n + (t - 1) * (binomial(static_cast<std::int64_t>(n) * n, 2) - c2 * c2) +
                     2 * binomial(t - 1, 2) * (c2 * c2 + n * binomial(n, 3));
    for (int j = 3; j <= t - 1; ++j) bracket += 2 * n * binomial(t - 1, j) * binomial(n, j + 1);
    if (t <= n) {
        const BigInt ct = binomial(n, t);
        bracket += ct * ct;
    }
    return full - bracket;
}

BigInt perm2_quotient_hilbert(int n, int t) {
    if (n < 2) throw std::invalid_argument("perm2_quotient_hilbert needs n >= 2");
    if (t < 0) return 0;
    const std::int64_t vars = static_cast<std::int64_t>(n) * n;
    if (t <= 1) return binomial(vars + t - 1, t);
    const BigInt c2 = binomial(n, 2);
    if (t == 2) return binomial(vars + 1, 2) - c2 * c2;
    BigInt hp = perm2_hilbert_polynomial(n, t);
    if (t <= n) {
        const BigInt ct = binomial(n, t);
        hp += ct * ct;
    }
    return hp;
}

BigInt sqfree_ideal_hilbert(int n, int kappa, int d) {
    BigInt total = 0;
    for (int s = kappa; s <= std::min(d, n); ++s) total += binomial(n, s) * binomial(d - 1, s - 1);
    return total;
}

BigInt sqfree_ideal_hilbert_verbatim(int n, int kappa, int d) {
    const int t = d - kappa;
    if (t < 0) return 0;
    BigInt total = 0;
    for (int j = 0; j <= n - kappa; ++j) total += binomial(n, kappa - j) * binomial(kappa + t - 1, kappa + j - 1);
    return total;
}

BigInt sqfree_quotient_hilbert(int n, int kappa, int d) {
    if (d < 0) return 0;
    if (d == 0) return 1;
    BigInt total = 0;
    for (int j = 0; j <= kappa - 2; ++j) total += binomial(n, j + 1) * binomial(d - 1, j);
    return total;
}

BigInt sqfree_quotient_hilbert_verbatim(int n, int kappa, int d) {
    if (d < 0) return 0;
    if (d < n - kappa - 1) return binomial(n + d - 1, n - 1);
    BigInt total = 0;
    for (int j = 0; j <= n - kappa - 2; ++j) total += binomial(n, j + 1) * binomial(d - 1, j);
    return total;
}

BigInt sqfree_betti(int n, int kappa, int i) {
    if (i < 0 || kappa + i > n) return 0;
    return binomial(n, kappa + i) * binomial(kappa - 1 + i, i);
}

BigInt sqfree_module_dim_verbatim(int n, int kappa, int j) {
    return binomial(kappa + j - 1, j) * binomial(n, kappa + j);
}

BigInt det_linear_strand_dim(int n, int r, int j) {
    if (r < 1 || j < 1) return 0;
    BigInt total = 0;
    for (int a = 0; a <= j - 1; ++a) {
        const int b = j - 1 - a;
        total += schur_dim(Partition::hook(a + 1, r + b), n) * schur_dim(Partition::hook(b + 1, r + a), n);
    }
    return total;
}

BigInt det_linear_syzygies(int n, int kappa) {
    if (kappa < 1 || kappa >= n) throw std::invalid_argument("det_linear_syzygies needs 1 <= kappa < n");
    const BigInt c = binomial(n, kappa + 1);
    const BigInt num = 2 * BigInt(kappa) * (n + 1) * c * c;
    if (num % (n - kappa) != 0) throw std::logic_error("det_linear_syzygies: inexact division");
    return num / (n - kappa);
}

namespace {

using Inputs = std::map<std::string, std::int64_t>;

int param(const Inputs& in, const char* name) {
    auto it = in.find(name);
    if (it == in.end()) throw std::invalid_argument(std::string("missing parameter: ") + name);
    return static_cast<int>(it->second);
}

struct Entry {
    const char* id;
    std::function<BigInt(const Inputs&)> eval;
};

const std::vector<Entry>& registry() {
    static const std::vector<Entry> table = {
        {"perm_linear_strand_dim", [](const Inputs& in) { return perm_linear_strand_dim(param(in, "n"), param(in, "kappa"), param(in, "j")); }},
        {"perm_linear_strand_induced", [](const Inputs& in) { return perm_linear_strand_induced(param(in, "n"), param(in, "kappa"), param(in, "j")); }},
        {"perm2_ideal_hilbert", [](const Inputs& in) { return perm2_ideal_hilbert(param(in, "n"), param(in, "t")); }},
        {"perm2_hilbert_polynomial", [](const Inputs& in) { return perm2_hilbert_polynomial(param(in, "n"), param(in, "t")); }},
        {"perm2_quotient_hilbert", [](const Inputs& in) { return perm2_quotient_hilbert(param(in, "n"), param(in, "t")); }},
        {"sqfree_ideal_hilbert", [](const Inputs& in) { return sqfree_ideal_hilbert(param(in, "n"), param(in, "kappa"), param(in, "d")); }},
        {"sqfree_ideal_hilbert_verbatim", [](const Inputs& in) { return sqfree_ideal_hilbert_verbatim(param(in, "n"), param(in, "kappa"), param(in, "d")); }},
        {"sqfree_quotient_hilbert", [](const Inputs& in) { return sqfree_quotient_hilbert(param(in, "n"), param(in, "kappa"), param(in, "d")); }},
        {"sqfree_quotient_hilbert_verbatim", [](const Inputs& in) { return sqfree_quotient_hilbert_verbatim(param(in, "n"), param(in, "kappa"), param(in, "d")); }},
        {"sqfree_betti", [](const Inputs& in) { return sqfree_betti(param(in, "n"), param(in, "kappa"), param(in, "i")); }},
        {"sqfree_module_dim_verbatim", [](const Inputs& in) { return sqfree_module_dim_verbatim(param(in, "n"), param(in, "kappa"), param(in, "j")); }},
        {"det_linear_strand_dim", [](const Inputs& in) { return det_linear_strand_dim(param(in, "n"), param(in, "r"), param(in, "j")); }},
        {"det_linear_syzygies", [](const Inputs& in) { return det_linear_syzygies(param(in, "n"), param(in, "kappa")); }},
    };
    return table;
}

}  // namespace

FormulaResult evaluate_formula(const std::string& formula_id, const Inputs& inputs) {
    for (const auto& e : registry()) {
        if (formula_id == e.id) return {e.eval(inputs), formula_id, inputs};
    }
    throw std::invalid_argument("unknown formula: " + formula_id);
}

std::vector<std::string> formula_ids() {
    std::vector<std::string> out;
    for (const auto& e : registry()) out.emplace_back(e.id);
    return out;
}

}  // namespace permres
