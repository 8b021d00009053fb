#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace permres {

/// Raised when a computation would exceed a configured size cap. Callers may
/// retry with the cap raised or with the expensive flag set.
class ResourceCapError : public std::runtime_error {
public:
    ResourceCapError(const std::string& what, std::uint64_t requested, std::uint64_t cap)
        : std::runtime_error(what + " (requested " + std::to_string(requested) + ", cap " + std::to_string(cap) + ")"),
          requested_(requested),
          cap_(cap) {}

    std::uint64_t requested() const { return requested_; }
    std::uint64_t cap() const { return cap_; }

private:
    std::uint64_t requested_;
    std::uint64_t cap_;
};

/// Size caps shared by the linear-algebra entry points. Defaults are sized for
/// a 16 GB machine.
struct ResourceLimits {
    std::uint64_t max_basis = 10'000'000;
    std::uint64_t max_nonzeros = 20'000'000;
    /// Lifts max_nonzeros; max_basis still applies.
    bool expensive = false;
};

}  // namespace permres
