#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include "permres/bigint.hpp"
#include "permres/ideal.hpp"

namespace permres::cli {

/// Identifies one oracle cell. `step` is -1 for Hilbert cells.
struct CellKey {
    std::string kind;  // "hilbert" or "betti"
    IdealSpec spec;
    int step = -1;
    int degree = 0;
    std::uint64_t prime_seed = 0;

    /// Canonical text form; the digest is taken over this.
    std::string canonical() const;
    /// Lowercase hex SHA-256 of canonical().
    std::string digest() const;
};

/// Hex SHA-256 of arbitrary bytes.
std::string sha256_hex(const std::string& data);

/// One file per cell under a directory. Files hold a version header, the
/// canonical key and the value; anything that does not parse, or that was
/// written by another version, reads as a miss.
class ResultCache {
public:
    ResultCache(std::filesystem::path dir, std::string version);

    std::optional<BigInt> get(const CellKey& key) const;
    /// Writes to a temporary file in the same directory and renames it into
    /// place, so readers never observe a partial file.
    void put(const CellKey& key, const BigInt& value) const;

    std::filesystem::path path_for(const CellKey& key) const;
    const std::filesystem::path& dir() const { return dir_; }

private:
    std::filesystem::path dir_;
    std::string version_;
};

/// Environment variable that supplies the cache directory when --cache-dir is absent.
inline constexpr const char* kCacheEnv = "PERMRES_CACHE_DIR";

}  // namespace permres::cli
