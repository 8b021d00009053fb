#include "permres/cli/args.hpp"

#include <sstream>

#include "CLI11.hpp"
#include "permres/cli/commands.hpp"

namespace permres::cli {

std::pair<int, int> parse_range(const std::string& text) {
    auto to_int = [&](const std::string& s) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(s, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (s.empty() || used != s.size()) throw std::invalid_argument("bad range '" + text + "'");
        return v;
    };
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
        const int v = to_int(text);
        return {v, v};
    }
    const int a = to_int(text.substr(0, dots));
    const int b = to_int(text.substr(dots + 2));
    if (b < a) throw std::invalid_argument("empty range '" + text + "'");
    return {a, b};
}

std::vector<int> parse_int_list(const std::string& text) {
    std::string s = text;
    for (char& c : s) {
        if (c == ',' || c == '(' || c == ')') c = ' ';
    }
    std::istringstream in(s);
    std::vector<int> out;
    std::string tok;
    while (in >> tok) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(tok, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != tok.size()) throw std::invalid_argument("bad integer '" + tok + "'");
        out.push_back(v);
    }
    return out;
}

namespace {

void put_range(Json& params, const std::string& text, const std::string& lo, const std::string& hi) {
    if (text.empty()) return;
    const auto [a, b] = parse_range(text);
    params[lo] = a;
    params[hi] = b;
}

}  // namespace

ParseOutcome parse_command_line(const std::vector<std::string>& args) {
    CLI::App app{"Hilbert functions, Betti numbers and resolution terms of sub-permanent, minor and square-free ideals",
                 "permres"};
    app.require_subcommand(1);
    app.set_version_flag("--version", artifact_version());

    CommandRequest req;
    bool json = false, csv = false;
    app.add_flag("--json", json, "Print the result envelope as JSON");
    app.add_flag("--csv", csv, "Print one CSV row per result");
    app.add_option("--cache-dir", req.cache_dir, std::string("Result cache directory (default: $") + kCacheEnv + ")");
    app.add_option("--prime-seed", req.prime_seed, "Seed for choosing the working primes")->capture_default_str();
    app.add_flag("--expensive", req.expensive, "Lift the nonzero cap and run optional heavy checks");
    app.add_option("--cap-nonzeros", req.cap_nonzeros, "Elimination nonzero cap")->capture_default_str();

    std::string family, mode = "both", t_range, steps, j_range, engine = "both", complex = "skeleton", suite = "all",
                sequence;
    int n = 0, kappa = 0, degree = -1, max_degree = -1, r = 0, dim = -2;
    bool dual = false;

    auto* hilbert = app.add_subcommand("hilbert", "Hilbert function of the ideal");
    hilbert->add_option("--family", family, "subpermanents | minors | squarefree")->required();
    hilbert->add_option("--n", n)->required();
    hilbert->add_option("--kappa", kappa)->required();
    hilbert->add_option("--t", t_range, "Degree or range a..b (default kappa..kappa+2)");
    hilbert->add_option("--mode", mode, "formula | oracle | both")->capture_default_str();

    auto* betti = app.add_subcommand("betti", "Graded Betti numbers of the ideal");
    betti->add_option("--family", family)->required();
    betti->add_option("--n", n)->required();
    betti->add_option("--kappa", kappa)->required();
    betti->add_option("--steps", steps, "Step or range a..b, step 0 = generators (default 0..2)");
    betti->add_option("--degree", degree, "Single degree (default: the linear strand)");
    betti->add_option("--max-degree", max_degree, "All degrees from the linear strand up to this one");
    betti->add_option("--mode", mode)->capture_default_str();

    auto* lascoux = app.add_subcommand("lascoux", "Generators of the resolution of the (r+1)-minors");
    lascoux->add_option("--n", n)->required();
    lascoux->add_option("--r", r)->required();
    lascoux->add_option("--j", j_range, "Step or range (default 1..(n-r)^2)");
    lascoux->add_option("--engine", engine, "direct | bott | both")->capture_default_str();

    auto* bott = app.add_subcommand("bott", "Dotted Weyl reduction of a weight sequence");
    bott->add_option("sequence", sequence, "Entries, e.g. 0,2,1")->required();

    auto* sr = app.add_subcommand("sr", "Face counts, h-vector and Alexander dual of a complex");
    sr->add_option("--complex", complex, "skeleton | perm2")->capture_default_str();
    sr->add_option("--n", n)->required();
    sr->add_option("--dim", dim, "Skeleton dimension");
    sr->add_flag("--dual", dual, "List the Alexander dual ideal generators");

    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    verify->add_option("suite", suite, "formulas | syzygies | lascoux | simplicial | all")->capture_default_str();

    for (auto* sub : {hilbert, betti, lascoux, bott, sr, verify}) sub->fallthrough();

    ParseOutcome outcome;
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        std::ostringstream out, err;
        outcome.exit_code = app.exit(e, out, err) == 0 ? 0 : 4;
        outcome.message = out.str() + err.str();
        return outcome;
    }
    if (json && csv) {
        outcome.exit_code = 4;
        outcome.message = "--json and --csv are mutually exclusive\n";
        return outcome;
    }
    req.format = json ? OutputFormat::json : csv ? OutputFormat::csv : OutputFormat::text;

    try {
        Json& p = req.params;
        if (hilbert->parsed() || betti->parsed()) {
            req.subcommand = hilbert->parsed() ? "hilbert" : "betti";
            p["family"] = family;
            p["n"] = n;
            p["kappa"] = kappa;
            p["mode"] = mode;
            if (hilbert->parsed()) put_range(p, t_range, "t_min", "t_max");
            if (betti->parsed()) {
                put_range(p, steps, "step_min", "step_max");
                if (degree >= 0) p["degree"] = degree;
                if (max_degree >= 0) p["max_degree"] = max_degree;
            }
        } else if (lascoux->parsed()) {
            req.subcommand = "lascoux";
            p["n"] = n;
            p["r"] = r;
            p["engine"] = engine;
            put_range(p, j_range, "j_min", "j_max");
        } else if (bott->parsed()) {
            req.subcommand = "bott";
            p["sequence"] = parse_int_list(sequence);
        } else if (sr->parsed()) {
            req.subcommand = "sr";
            p["complex"] = complex;
            p["n"] = n;
            if (dim != -2) p["dim"] = dim;
            p["dual"] = dual;
        } else {
            req.subcommand = "verify";
            p["suite"] = suite;
        }
    } catch (const std::invalid_argument& e) {
        outcome.exit_code = 4;
        outcome.message = std::string(e.what()) + "\n";
        return outcome;
    }
    outcome.request = std::move(req);
    return outcome;
}

}  // namespace permres::cli
