#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "permres/bigint.hpp"

namespace permres::cli {

using Json = nlohmann::ordered_json;

enum class OutputFormat { text, json, csv };

std::string to_string(OutputFormat format);
OutputFormat parse_format(const std::string& text);

/// One invocation: the subcommand, its parameters, and the global options.
struct CommandRequest {
    std::string subcommand;
    Json params = Json::object();
    OutputFormat format = OutputFormat::text;
    bool expensive = false;
    std::string cache_dir;  // empty: no cache
    std::uint64_t prime_seed = 0x5eedULL;
    std::uint64_t cap_nonzeros = 20'000'000;

    bool operator==(const CommandRequest&) const = default;
};

/// A row of output. Labels identify the cell; `formula` and `oracle` hold the
/// two independent values when they were computed. `match` is present exactly
/// when both are.
struct ResultRecord {
    Json labels = Json::object();
    std::optional<BigInt> formula;
    std::optional<BigInt> oracle;
    std::optional<bool> match;

    /// Sets match from value equality, or clears it if a side is missing.
    void settle();
    /// Sets match explicitly (used when equality of the values is not the
    /// whole story, e.g. set comparisons). Ignored unless both sides exist.
    void settle(bool agree);

    bool operator==(const ResultRecord&) const = default;
};

enum class Status { ok, mismatch, resource_cap, invalid };

std::string to_string(Status status);
Status parse_status(const std::string& text);
/// 0, 2, 3, 4 for ok, mismatch, resource cap, invalid parameters.
int exit_code(Status status);

struct CacheStats {
    std::uint64_t hits = 0;
    std::uint64_t misses = 0;
    std::uint64_t audited = 0;
    std::uint64_t audit_failures = 0;

    bool operator==(const CacheStats&) const = default;
};

struct ResultEnvelope {
    std::string version;
    CommandRequest request;
    Status status = Status::ok;
    std::string error;
    std::vector<ResultRecord> results;
    double seconds = 0.0;
    std::vector<std::uint32_t> primes;
    CacheStats cache;

    /// Recomputes status from the records: mismatch if any match is false.
    /// Leaves resource_cap and invalid untouched.
    void finalize();
    std::size_t mismatches() const;

    bool operator==(const ResultEnvelope&) const = default;
};

Json to_json(const CommandRequest& request);
CommandRequest request_from_json(const Json& j);
Json to_json(const ResultEnvelope& envelope);
ResultEnvelope envelope_from_json(const Json& j);

/// One row per result; label columns in order of first appearance, then
/// formula, oracle, match.
std::string to_csv(const ResultEnvelope& envelope);
/// Aligned plain-text table with a one-line summary.
std::string to_text(const ResultEnvelope& envelope);

}  // namespace permres::cli
