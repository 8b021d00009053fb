#include "permres/cli/commands.hpp"

#include <chrono>
#include <cstdlib>
#include <map>
#include <sstream>

#include "permres/closed_forms.hpp"
#include "permres/lascoux.hpp"
#include "permres/simplicial.hpp"
#include "verify.hpp"

#ifndef PERMRES_VERSION
#define PERMRES_VERSION "dev"
#endif

namespace permres::cli {

const std::string& artifact_version() {
    static const std::string v = PERMRES_VERSION;
    return v;
}

Context::Context(const CommandRequest& request, const RunOptions& options)
    : primes_(choose_primes(request.prime_seed, 3)),
      seed_(request.prime_seed),
      expensive_(request.expensive),
      audit_fraction_(options.audit_fraction),
      audit_rng_(options.audit_seed ? options.audit_seed : std::random_device{}()) {
    config_.limits.max_nonzeros = request.cap_nonzeros;
    config_.limits.expensive = request.expensive;
    std::string dir = request.cache_dir;
    if (dir.empty()) {
        if (const char* env = std::getenv(kCacheEnv)) dir = env;
    }
    if (!dir.empty()) cache_.emplace(dir, artifact_version());
}

BigInt Context::cell(const CellKey& key, const std::function<BigInt(const PrimeField&)>& compute) {
    auto fresh = [&] {
        std::vector<std::uint32_t> used;
        BigInt v = agreed(primes_, compute, &used);
        primes_used.insert(used.begin(), used.end());
        return v;
    };
    if (!cache_) return fresh();
    if (auto hit = cache_->get(key)) {
        ++stats.hits;
        if (std::bernoulli_distribution(audit_fraction_)(audit_rng_)) {
            ++stats.audited;
            const BigInt v = fresh();
            if (v != *hit) {
                ++stats.audit_failures;
                cache_->put(key, v);
                return v;
            }
        }
        return *hit;
    }
    ++stats.misses;
    const BigInt v = fresh();
    cache_->put(key, v);
    return v;
}

BigInt Context::hilbert(const IdealSpec& spec, int t) {
    return cell({"hilbert", spec, -1, t, seed_},
                [&](const PrimeField& f) { return hilbert_oracle(spec, t, f, config_); });
}

BigInt Context::betti(const IdealSpec& spec, int step, int degree) {
    return cell({"betti", spec, step, degree, seed_},
                [&](const PrimeField& f) { return betti_oracle(spec, step, degree, f, config_); });
}

std::optional<BigInt> hilbert_formula(const IdealSpec& spec, int t) {
    const int n = spec.n, k = spec.kappa;
    if (t < k) return BigInt(0);
    switch (spec.family) {
        case Family::squarefree:
            return sqfree_ideal_hilbert(n, k, t);
        case Family::minors: {
            // alternating sum over the Lascoux resolution
            const int N = n * n, r = k - 1;
            BigInt ideal = 0;
            for (int j = 1; j <= (n - r) * (n - r); ++j) {
                for (const auto& term : lascoux_terms(n, r, j)) {
                    const BigInt c = term.dimension * binomial(N + t - term.degree - 1, N - 1);
                    ideal += j % 2 ? c : BigInt(-c);
                }
            }
            return ideal;
        }
        case Family::subpermanents: {
            const int N = n * n;
            if (k == 1) return binomial(N + t - 1, t);
            if (k == n) return binomial(N + t - n - 1, t - n);
            if (k == 2) return perm2_ideal_hilbert(n, t);
            return std::nullopt;
        }
    }
    return std::nullopt;
}

std::optional<BigInt> betti_formula(const IdealSpec& spec, int step, int degree) {
    const int n = spec.n, k = spec.kappa;
    switch (spec.family) {
        case Family::squarefree:
            return degree == k + step ? sqfree_betti(n, k, step) : BigInt(0);
        case Family::minors: {
            BigInt total = 0;
            if (step + 1 <= (n - k + 1) * (n - k + 1)) {
                for (const auto& term : lascoux_terms(n, k - 1, step + 1)) {
                    if (term.degree == degree) total += term.dimension;
                }
            }
            return total;
        }
        case Family::subpermanents:
            if (k == 1) return degree == step + 1 ? binomial(n * n, step + 1) : BigInt(0);
            if (k == n) return (step == 0 && degree == n) ? BigInt(1) : BigInt(0);
            if (degree == k + step) return perm_linear_strand_dim(n, k, step + 1);
            if (degree < k + step) return BigInt(0);
            return std::nullopt;
    }
    return std::nullopt;
}

namespace {

using Clock = std::chrono::steady_clock;

// One partition pair as seen by each lascoux engine.
struct EngineRow {
    ResolutionTerm term;
    std::optional<BigInt> direct;
    std::optional<BigInt> bott;
};

int param_int(const Json& p, const std::string& name) {
    if (!p.contains(name) || !p.at(name).is_number_integer()) throw InvalidParameters("missing integer parameter '" + name + "'");
    return p.at(name).get<int>();
}

int param_int(const Json& p, const std::string& name, int fallback) {
    return p.contains(name) ? param_int(p, name) : fallback;
}

std::string param_str(const Json& p, const std::string& name, const std::string& fallback) {
    if (!p.contains(name)) return fallback;
    if (!p.at(name).is_string()) throw InvalidParameters("parameter '" + name + "' must be a string");
    return p.at(name).get<std::string>();
}

IdealSpec spec_from(const Json& p) {
    IdealSpec spec;
    try {
        spec.family = parse_family(param_str(p, "family", ""));
    } catch (const std::invalid_argument& e) {
        throw InvalidParameters(e.what());
    }
    spec.n = param_int(p, "n");
    spec.kappa = param_int(p, "kappa");
    if (spec.n < 1 || spec.kappa < 1 || spec.kappa > spec.n) throw InvalidParameters("need 1 <= kappa <= n");
    if (spec.family != Family::squarefree && spec.n > 15) throw InvalidParameters("n too large for the matrix families");
    if (spec.family == Family::squarefree && spec.n > 64) throw InvalidParameters("n too large");
    return spec;
}

enum class Mode { formula, oracle, both };

Mode mode_from(const Json& p) {
    const std::string m = param_str(p, "mode", "both");
    if (m == "formula") return Mode::formula;
    if (m == "oracle") return Mode::oracle;
    if (m == "both") return Mode::both;
    throw InvalidParameters("mode must be formula, oracle or both");
}

std::pair<int, int> range_from(const Json& p, const std::string& lo, const std::string& hi, int default_lo,
                               int default_hi) {
    const int a = param_int(p, lo, default_lo);
    const int b = param_int(p, hi, default_hi);
    if (a < 0 || b < a) throw InvalidParameters("bad range " + lo + ".." + hi);
    return {a, b};
}

void cmd_hilbert(const CommandRequest& req, Context& ctx, ResultEnvelope& env) {
    const IdealSpec spec = spec_from(req.params);
    const Mode mode = mode_from(req.params);
    const auto [t0, t1] = range_from(req.params, "t_min", "t_max", spec.kappa, spec.kappa + 2);
    for (int t = t0; t <= t1; ++t) {
        ResultRecord r;
        r.labels = {{"family", to_string(spec.family)}, {"n", spec.n}, {"kappa", spec.kappa}, {"t", t}};
        if (mode != Mode::oracle) r.formula = hilbert_formula(spec, t);
        if (mode != Mode::formula) r.oracle = ctx.hilbert(spec, t);
        r.settle();
        env.results.push_back(std::move(r));
    }
}

void cmd_betti(const CommandRequest& req, Context& ctx, ResultEnvelope& env) {
    const IdealSpec spec = spec_from(req.params);
    const Mode mode = mode_from(req.params);
    const auto [i0, i1] = range_from(req.params, "step_min", "step_max", 0, 2);
    const bool fixed_degree = req.params.contains("degree");
    const int degree = fixed_degree ? param_int(req.params, "degree") : 0;
    const int max_degree = param_int(req.params, "max_degree", -1);
    for (int i = i0; i <= i1; ++i) {
        std::vector<int> degrees;
        if (fixed_degree) {
            degrees.push_back(degree);
        } else if (max_degree >= 0) {
            for (int d = spec.kappa + i; d <= max_degree; ++d) degrees.push_back(d);
        } else {
            degrees.push_back(spec.kappa + i);
        }
        for (int d : degrees) {
            ResultRecord r;
            r.labels = {{"family", to_string(spec.family)}, {"n", spec.n}, {"kappa", spec.kappa}, {"step", i}, {"degree", d}};
            if (mode != Mode::oracle) r.formula = betti_formula(spec, i, d);
            if (mode != Mode::formula) r.oracle = ctx.betti(spec, i, d);
            r.settle();
            env.results.push_back(std::move(r));
        }
    }
}

void cmd_lascoux(const CommandRequest& req, Context&, ResultEnvelope& env) {
    const int n = param_int(req.params, "n");
    const int r = param_int(req.params, "r");
    if (n < 1 || r < 0 || r >= n || n > 12) throw InvalidParameters("need 0 <= r < n <= 12");
    const int len = (n - r) * (n - r);
    const auto [j0, j1] = range_from(req.params, "j_min", "j_max", 1, len);
    if (j0 < 1 || j1 > len) throw InvalidParameters("need 1 <= j <= (n-r)^2 = " + std::to_string(len));
    const std::string engine = param_str(req.params, "engine", "both");
    if (engine != "direct" && engine != "bott" && engine != "both") throw InvalidParameters("engine must be direct, bott or both");

    for (int j = j0; j <= j1; ++j) {
        using Key = std::pair<Partition, Partition>;
        std::map<Key, EngineRow> rows;
        if (engine != "bott") {
            for (const auto& t : lascoux_terms(n, r, j)) {
                auto& row = rows[{t.lambda_e, t.lambda_f}];
                row.term = t;
                row.direct = t.dimension;
            }
        }
        if (engine != "direct") {
            for (const auto& t : resolution_via_bott(n, r, j)) {
                auto& row = rows[{t.lambda_e, t.lambda_f}];
                row.term = t;
                row.bott = t.dimension;
            }
        }
        std::vector<EngineRow> ordered;
        for (auto& [key, row] : rows) ordered.push_back(row);
        std::sort(ordered.begin(), ordered.end(), [](const EngineRow& a, const EngineRow& b) { return a.term < b.term; });
        for (const auto& row : ordered) {
            ResultRecord rec;
            rec.labels = {{"n", n},
                          {"r", r},
                          {"j", j},
                          {"s", row.term.s},
                          {"degree", row.term.degree},
                          {"lambda_e", row.term.lambda_e.to_string()},
                          {"lambda_f", row.term.lambda_f.to_string()}};
            rec.formula = row.direct;
            rec.oracle = row.bott;
            // a term found by only one engine is a disagreement
            if (engine == "both") {
                if (!rec.formula) rec.formula = BigInt(0);
                if (!rec.oracle) rec.oracle = BigInt(0);
            }
            rec.settle();
            env.results.push_back(std::move(rec));
        }
    }
}

std::vector<int> int_list(const Json& p, const std::string& name) {
    if (!p.contains(name) || !p.at(name).is_array()) throw InvalidParameters("missing integer list '" + name + "'");
    std::vector<int> out;
    for (const auto& v : p.at(name)) {
        if (!v.is_number_integer()) throw InvalidParameters("'" + name + "' must hold integers");
        out.push_back(v.get<int>());
    }
    return out;
}

std::string join(const std::vector<int>& v) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    return os.str() + ")";
}

void cmd_bott(const CommandRequest& req, Context&, ResultEnvelope& env) {
    const auto seq = int_list(req.params, "sequence");
    if (seq.empty() || seq.size() > 64) throw InvalidParameters("sequence must have 1..64 entries");
    for (int v : seq) {
        if (v < 0) throw InvalidParameters("sequence entries must be nonnegative");
    }
    const BottOutcome out = bott_reduce(WeightSequence(seq));
    ResultRecord rec;
    rec.labels = {{"sequence", join(seq)}, {"wall", out.wall}};
    if (!out.wall) {
        rec.labels["u"] = out.u;
        rec.labels["result"] = out.result.to_string();
    }
    env.results.push_back(std::move(rec));
}

std::string vertex_set(const std::vector<int>& vs) {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < vs.size(); ++i) os << (i ? "," : "") << vs[i];
    return os.str() + "}";
}

void cmd_sr(const CommandRequest& req, Context&, ResultEnvelope& env) {
    const std::string complex = param_str(req.params, "complex", "skeleton");
    const int n = param_int(req.params, "n");
    std::optional<SimplicialComplex> delta;
    std::vector<BigInt> expected;  // f_{-1}, f_0, ...
    if (complex == "skeleton") {
        const int dim = param_int(req.params, "dim");
        if (n < 1 || n > 64 || dim < -1 || dim > n - 1) throw InvalidParameters("need 1 <= n <= 64 and -1 <= dim < n");
        delta.emplace(skeleton_complex(n, dim));
        for (int i = -1; i <= dim; ++i) expected.push_back(binomial(n, i + 1));
    } else if (complex == "perm2") {
        if (n < 2 || n > 8) throw InvalidParameters("perm2 complex needs 2 <= n <= 8");
        delta.emplace(perm2_complex(n));
        expected.push_back(1);
        for (const auto& f : perm2_f_vector(n)) expected.push_back(f);
    } else {
        throw InvalidParameters("complex must be skeleton or perm2");
    }
    const int max_dim = static_cast<int>(expected.size()) - 2;
    const auto counted = count_faces(*delta, max_dim);
    for (std::size_t i = 0; i < expected.size(); ++i) {
        ResultRecord rec;
        rec.labels = {{"complex", complex}, {"n", n}, {"vector", "f"}, {"index", static_cast<int>(i) - 1}};
        rec.formula = expected[i];
        rec.oracle = counted[i];
        rec.settle();
        env.results.push_back(std::move(rec));
    }
    const auto h = h_vector(*delta);
    for (std::size_t i = 0; i < h.size(); ++i) {
        ResultRecord rec;
        rec.labels = {{"complex", complex}, {"n", n}, {"vector", "h"}, {"index", static_cast<int>(i)},
                      {"value", h[i].str()}};
        env.results.push_back(std::move(rec));
    }
    if (req.params.value("dual", false)) {
        for (const auto& g : alexander_dual_ideal(*delta)) {
            ResultRecord rec;
            rec.labels = {{"complex", complex}, {"n", n}, {"vector", "dual_generator"}, {"value", vertex_set(g)}};
            env.results.push_back(std::move(rec));
        }
    }
}

void cmd_verify(const CommandRequest& req, Context& ctx, ResultEnvelope& env) {
    const std::string suite = param_str(req.params, "suite", "all");
    const auto& names = verify_suites();
    if (std::find(names.begin(), names.end(), suite) == names.end()) throw InvalidParameters("unknown suite '" + suite + "'");
    run_suite(suite, ctx, env.results);
}

}  // namespace

const std::vector<std::string>& verify_suites() {
    static const std::vector<std::string> names = {"formulas", "syzygies", "lascoux", "simplicial", "all"};
    return names;
}

ResultEnvelope run(const CommandRequest& request, const RunOptions& options) {
    ResultEnvelope env;
    env.version = artifact_version();
    env.request = request;
    const auto start = Clock::now();
    std::optional<Context> ctx;
    try {
        ctx.emplace(request, options);
        if (request.subcommand == "hilbert") {
            cmd_hilbert(request, *ctx, env);
        } else if (request.subcommand == "betti") {
            cmd_betti(request, *ctx, env);
        } else if (request.subcommand == "lascoux") {
            cmd_lascoux(request, *ctx, env);
        } else if (request.subcommand == "bott") {
            cmd_bott(request, *ctx, env);
        } else if (request.subcommand == "sr") {
            cmd_sr(request, *ctx, env);
        } else if (request.subcommand == "verify") {
            cmd_verify(request, *ctx, env);
        } else {
            throw InvalidParameters("unknown subcommand '" + request.subcommand + "'");
        }
    } catch (const InvalidParameters& e) {
        env.status = Status::invalid;
        env.error = e.what();
    } catch (const ResourceCapError& e) {
        env.status = Status::resource_cap;
        env.error = std::string(e.what()) + "; rerun with --expensive or a larger --cap-nonzeros";
    } catch (const FaceCountCapError& e) {
        env.status = Status::resource_cap;
        env.error = e.what();
    }
    if (ctx) {
        env.cache = ctx->stats;
        env.primes.assign(ctx->primes_used.begin(), ctx->primes_used.end());
    }
    env.finalize();
    env.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    return env;
}

}  // namespace permres::cli
