#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <string>

#include "permres/cli/cache.hpp"
#include "permres/cli/envelope.hpp"
#include "permres/oracle.hpp"

namespace permres::cli {

/// Version string written into envelopes and cache headers.
const std::string& artifact_version();

/// Bad user input; maps to exit code 4.
struct InvalidParameters : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct RunOptions {
    /// Fraction of cache hits recomputed from scratch and compared.
    double audit_fraction = 0.05;
    /// Seed for choosing audited cells; 0 draws from std::random_device.
    std::uint64_t audit_seed = 0;
};

/// Oracle access for one run: two-prime agreement, the on-disk cache and
/// its audit, and the resource limits from the request.
class Context {
public:
    Context(const CommandRequest& request, const RunOptions& options);

    BigInt hilbert(const IdealSpec& spec, int t);
    BigInt betti(const IdealSpec& spec, int step, int degree);

    const OracleConfig& config() const { return config_; }
    const std::vector<PrimeField>& primes() const { return primes_; }
    bool expensive() const { return expensive_; }

    CacheStats stats;
    std::set<std::uint32_t> primes_used;

private:
    BigInt cell(const CellKey& key, const std::function<BigInt(const PrimeField&)>& compute);

    OracleConfig config_;
    std::vector<PrimeField> primes_;
    std::uint64_t seed_;
    bool expensive_;
    std::optional<ResultCache> cache_;
    double audit_fraction_;
    std::mt19937_64 audit_rng_;
};

/// Closed forms used by the hilbert and betti subcommands; nullopt where the
/// family has no formula for that cell.
std::optional<BigInt> hilbert_formula(const IdealSpec& spec, int t);
std::optional<BigInt> betti_formula(const IdealSpec& spec, int step, int degree);

/// Runs a request and never throws for bad input or exceeded caps: those
/// become the envelope status.
ResultEnvelope run(const CommandRequest& request, const RunOptions& options = {});

/// Suite names accepted by `verify`.
const std::vector<std::string>& verify_suites();

}  // namespace permres::cli
