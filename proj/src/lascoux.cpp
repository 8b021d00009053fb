#include "permres/lascoux.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace permres {

std::string ResolutionTerm::to_string() const {
    std::ostringstream os;
    os << "F" << step << " deg " << degree << ": S" << lambda_e.to_string() << "E (x) S" << lambda_f.to_string()
       << "F  dim " << dimension;
    return os.str();
}

bool ResolutionTerm::operator<(const ResolutionTerm& other) const {
    return std::tie(step, degree, lambda_e, lambda_f, s) <
           std::tie(other.step, other.degree, other.lambda_e, other.lambda_f, other.s);
}

BigInt total_dimension(const std::vector<ResolutionTerm>& terms) {
    BigInt total = 0;
    for (const auto& t : terms) total += t.dimension;
    return total;
}

namespace {

int isqrt(int j) {
    int s = static_cast<int>(std::sqrt(static_cast<double>(j)));
    while (s * s > j) --s;
    while ((s + 1) * (s + 1) <= j) ++s;
    return s;
}

// (s)^{r+s} + (head, 0^r, tail): head padded to s entries, tail appended.
Partition assemble(int s, int r, const Partition& head, const Partition& tail) {
    std::vector<int> parts(static_cast<std::size_t>(r + s), s);
    for (int i = 0; i < head.length(); ++i) parts[static_cast<std::size_t>(i)] += head[static_cast<std::size_t>(i)];
    for (int v : tail.parts()) parts.push_back(v);
    return Partition(std::move(parts));
}

ResolutionTerm make_term(int n, int step, int s, int degree, Partition e, Partition f) {
    ResolutionTerm t;
    t.step = step;
    t.s = s;
    t.degree = degree;
    t.dimension = schur_dim(e, n) * schur_dim(f, n);
    t.lambda_e = std::move(e);
    t.lambda_f = std::move(f);
    return t;
}

std::vector<int> ascents(const std::vector<int>& a) {
    std::vector<int> out;
    for (std::size_t i = 0; i + 1 < a.size(); ++i) {
        if (a[i] < a[i + 1]) out.push_back(static_cast<int>(i));
    }
    return out;
}

template <class Choose>
BottOutcome reduce_with(const WeightSequence& seq, Choose&& choose) {
    std::vector<int> a = seq.entries();
    const std::size_t len = a.size();
    // Every reflection removes one inversion of a + rho, so len^2 steps is generous.
    const std::size_t cap = len * len + 1;
    BottOutcome out;
    for (std::size_t step = 0;; ++step) {
        if (step > cap) throw std::logic_error("bott_reduce did not terminate");
        const auto asc = ascents(a);
        if (asc.empty()) break;
        const auto i = static_cast<std::size_t>(choose(asc));
        if (a[i + 1] == a[i] + 1) {
            out.wall = true;
            return out;
        }
        const int left = a[i];
        a[i] = a[i + 1] - 1;
        a[i + 1] = left + 1;
        ++out.u;
    }
    if (!a.empty() && a.back() < 0) throw std::invalid_argument("bott_reduce: result has negative entries");
    out.result = Partition(std::vector<int>(a.begin(), a.end()));
    return out;
}

void check_sequence(const WeightSequence& seq) {
    for (int v : seq.entries()) {
        if (v < 0) throw std::invalid_argument("bott_reduce expects nonnegative entries");
    }
}

}  // namespace

std::vector<ResolutionTerm> lascoux_terms(int n, int r, int j) {
    std::vector<ResolutionTerm> out;
    if (r < 0 || n < 1 || j < 1 || j > (n - r) * (n - r)) return out;
    for (int s = 1; s <= isqrt(j); ++s) {
        const int rest = j - s * s;
        for (int wa = 0; wa <= rest; ++wa) {
            for (const auto& alpha : partitions_of(wa, s)) {
                for (const auto& beta : partitions_of(rest - wa, s)) {
                    Partition e = assemble(s, r, alpha, conjugate(beta));
                    Partition f = assemble(s, r, beta, conjugate(alpha));
                    if (e.length() > n || f.length() > n || e[0] > n || f[0] > n) continue;
                    out.push_back(make_term(n, j, s, s * r + j, std::move(e), std::move(f)));
                }
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

BottOutcome bott_reduce(const WeightSequence& seq) {
    check_sequence(seq);
    return reduce_with(seq, [](const std::vector<int>& asc) { return asc.front(); });
}

BottOutcome bott_reduce_random(const WeightSequence& seq, std::mt19937_64& rng) {
    check_sequence(seq);
    return reduce_with(seq, [&](const std::vector<int>& asc) {
        std::uniform_int_distribution<std::size_t> pick(0, asc.size() - 1);
        return asc[pick(rng)];
    });
}

std::vector<ResolutionTerm> resolution_via_bott(int n, int r, int j) {
    std::vector<ResolutionTerm> out;
    if (r < 0 || n < 1 || j < 1 || j > (n - r) * (n - r)) return out;
    for (int s = 1; s <= isqrt(j); ++s) {
        for (const auto& pi : partitions_of(j + r * s, n - r, n)) {
            const BottOutcome b = bott_reduce(WeightSequence::shifted(r, pi, n));
            if (b.wall || b.u != r * s) continue;
            Partition f = conjugate(pi);
            if (b.result.length() > n || f.length() > n) continue;
            out.push_back(make_term(n, j, s, s * r + j, b.result, std::move(f)));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<ResolutionTerm> perm_ambient_linear_strand(int n, int kappa, int j) {
    std::vector<ResolutionTerm> out;
    if (kappa < 1 || j < 1) return out;
    for (int a = 0; a <= j - 1; ++a) {
        const int b = j - 1 - a;
        Partition e = Partition::hook(kappa + b, a);
        Partition f = Partition::hook(kappa + a, b);
        if (e.length() > n || f.length() > n) continue;
        out.push_back(make_term(n, j, 1, kappa + j - 1, std::move(e), std::move(f)));
    }
    std::sort(out.begin(), out.end());
    return out;
}

BigInt regular_dimension(const ResolutionTerm& term, int n) {
    const int we = term.lambda_e.weight();
    const int wf = term.lambda_f.weight();
    if (we > n || wf > n) return 0;
    return binomial(n, we) * binomial(n, wf) * specht_dim(term.lambda_e) * specht_dim(term.lambda_f);
}

}  // namespace permres
