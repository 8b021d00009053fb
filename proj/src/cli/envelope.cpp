#include "permres/cli/envelope.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace permres::cli {

std::string to_string(OutputFormat format) {
    switch (format) {
        case OutputFormat::text: return "text";
        case OutputFormat::json: return "json";
        case OutputFormat::csv: return "csv";
    }
    return "text";
}

OutputFormat parse_format(const std::string& text) {
    if (text == "text") return OutputFormat::text;
    if (text == "json") return OutputFormat::json;
    if (text == "csv") return OutputFormat::csv;
    throw std::invalid_argument("unknown output format '" + text + "'");
}

void ResultRecord::settle() {
    if (formula && oracle) {
        match = *formula == *oracle;
    } else {
        match.reset();
    }
}

void ResultRecord::settle(bool agree) {
    if (formula && oracle) {
        match = agree;
    } else {
        match.reset();
    }
}

std::string to_string(Status status) {
    switch (status) {
        case Status::ok: return "ok";
        case Status::mismatch: return "mismatch";
        case Status::resource_cap: return "resource_cap";
        case Status::invalid: return "invalid";
    }
    return "ok";
}

Status parse_status(const std::string& text) {
    if (text == "ok") return Status::ok;
    if (text == "mismatch") return Status::mismatch;
    if (text == "resource_cap") return Status::resource_cap;
    if (text == "invalid") return Status::invalid;
    throw std::invalid_argument("unknown status '" + text + "'");
}

int exit_code(Status status) {
    switch (status) {
        case Status::ok: return 0;
        case Status::mismatch: return 2;
        case Status::resource_cap: return 3;
        case Status::invalid: return 4;
    }
    return 1;
}

std::size_t ResultEnvelope::mismatches() const {
    return static_cast<std::size_t>(
        std::count_if(results.begin(), results.end(), [](const ResultRecord& r) { return r.match == false; }));
}

void ResultEnvelope::finalize() {
    if (status == Status::resource_cap || status == Status::invalid) return;
    status = (mismatches() > 0 || cache.audit_failures > 0) ? Status::mismatch : Status::ok;
}

namespace {

// Values can exceed 64 bits, so they travel as decimal strings.
Json big(const std::optional<BigInt>& v) { return v ? Json(v->str()) : Json(nullptr); }

std::optional<BigInt> big_from(const Json& j) {
    if (j.is_null()) return std::nullopt;
    return parse_bigint(j.get<std::string>());
}

std::string cell(const Json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_null()) return "";
    return v.dump();
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::vector<std::string> label_columns(const ResultEnvelope& env) {
    std::vector<std::string> cols;
    for (const auto& r : env.results) {
        for (const auto& [key, value] : r.labels.items()) {
            if (std::find(cols.begin(), cols.end(), key) == cols.end()) cols.push_back(key);
        }
    }
    return cols;
}

}  // namespace

Json to_json(const CommandRequest& request) {
    Json j;
    j["subcommand"] = request.subcommand;
    j["params"] = request.params;
    j["format"] = to_string(request.format);
    j["expensive"] = request.expensive;
    j["cache_dir"] = request.cache_dir;
    j["prime_seed"] = request.prime_seed;
    j["cap_nonzeros"] = request.cap_nonzeros;
    return j;
}

CommandRequest request_from_json(const Json& j) {
    CommandRequest r;
    r.subcommand = j.at("subcommand").get<std::string>();
    r.params = j.at("params");
    r.format = parse_format(j.at("format").get<std::string>());
    r.expensive = j.at("expensive").get<bool>();
    r.cache_dir = j.at("cache_dir").get<std::string>();
    r.prime_seed = j.at("prime_seed").get<std::uint64_t>();
    r.cap_nonzeros = j.at("cap_nonzeros").get<std::uint64_t>();
    return r;
}

Json to_json(const ResultEnvelope& env) {
    Json j;
    j["version"] = env.version;
    j["request"] = to_json(env.request);
    j["status"] = to_string(env.status);
    j["error"] = env.error;
    Json rows = Json::array();
    for (const auto& r : env.results) {
        Json row;
        row["labels"] = r.labels;
        row["formula"] = big(r.formula);
        row["oracle"] = big(r.oracle);
        row["match"] = r.match ? Json(*r.match) : Json(nullptr);
        rows.push_back(std::move(row));
    }
    j["results"] = std::move(rows);
    j["summary"] = {{"rows", env.results.size()}, {"mismatches", env.mismatches()}};
    j["seconds"] = env.seconds;
    j["primes"] = env.primes;
    j["cache"] = {{"hits", env.cache.hits},
                  {"misses", env.cache.misses},
                  {"audited", env.cache.audited},
                  {"audit_failures", env.cache.audit_failures}};
    return j;
}

ResultEnvelope envelope_from_json(const Json& j) {
    ResultEnvelope env;
    env.version = j.at("version").get<std::string>();
    env.request = request_from_json(j.at("request"));
    env.status = parse_status(j.at("status").get<std::string>());
    env.error = j.at("error").get<std::string>();
    for (const auto& row : j.at("results")) {
        ResultRecord r;
        r.labels = row.at("labels");
        r.formula = big_from(row.at("formula"));
        r.oracle = big_from(row.at("oracle"));
        if (!row.at("match").is_null()) r.match = row.at("match").get<bool>();
        env.results.push_back(std::move(r));
    }
    env.seconds = j.at("seconds").get<double>();
    env.primes = j.at("primes").get<std::vector<std::uint32_t>>();
    const auto& c = j.at("cache");
    env.cache = {c.at("hits").get<std::uint64_t>(), c.at("misses").get<std::uint64_t>(),
                 c.at("audited").get<std::uint64_t>(), c.at("audit_failures").get<std::uint64_t>()};
    return env;
}

std::string to_csv(const ResultEnvelope& env) {
    const auto cols = label_columns(env);
    std::ostringstream os;
    for (const auto& c : cols) os << csv_escape(c) << ',';
    os << "formula,oracle,match\n";
    for (const auto& r : env.results) {
        for (const auto& c : cols) os << csv_escape(r.labels.contains(c) ? cell(r.labels.at(c)) : "") << ',';
        os << (r.formula ? r.formula->str() : "") << ',' << (r.oracle ? r.oracle->str() : "") << ','
           << (r.match ? (*r.match ? "true" : "false") : "") << '\n';
    }
    return os.str();
}

std::string to_text(const ResultEnvelope& env) {
    std::ostringstream os;
    if (!env.error.empty()) os << "error: " << env.error << '\n';
    if (!env.results.empty()) {
        auto cols = label_columns(env);
        bool any_formula = false, any_oracle = false, any_match = false;
        for (const auto& r : env.results) {
            any_formula = any_formula || r.formula.has_value();
            any_oracle = any_oracle || r.oracle.has_value();
            any_match = any_match || r.match.has_value();
        }
        std::vector<std::vector<std::string>> table;
        std::vector<std::string> header = cols;
        if (any_formula) header.push_back("formula");
        if (any_oracle) header.push_back("oracle");
        if (any_match) header.push_back("match");
        table.push_back(header);
        for (const auto& r : env.results) {
            std::vector<std::string> line;
            for (const auto& c : cols) line.push_back(r.labels.contains(c) ? cell(r.labels.at(c)) : "");
            if (any_formula) line.push_back(r.formula ? r.formula->str() : "-");
            if (any_oracle) line.push_back(r.oracle ? r.oracle->str() : "-");
            if (any_match) line.push_back(r.match ? (*r.match ? "yes" : "NO") : "-");
            table.push_back(std::move(line));
        }
        std::vector<std::size_t> width(header.size(), 0);
        for (const auto& line : table) {
            for (std::size_t i = 0; i < line.size(); ++i) width[i] = std::max(width[i], line[i].size());
        }
        for (const auto& line : table) {
            for (std::size_t i = 0; i < line.size(); ++i) {
                os << line[i];
                if (i + 1 < line.size()) os << std::string(width[i] - line[i].size() + 2, ' ');
            }
            os << '\n';
        }
    }
    os << to_string(env.status) << ": " << env.results.size() << " rows, " << env.mismatches() << " mismatches";
    if (env.cache.hits + env.cache.misses > 0) {
        os << ", cache " << env.cache.hits << " hits / " << env.cache.misses << " misses";
        if (env.cache.audited) os << " (" << env.cache.audited << " audited)";
    }
    os << ", " << env.seconds << " s\n";
    return os.str();
}

}  // namespace permres::cli
