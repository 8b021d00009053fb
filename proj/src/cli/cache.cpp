#include "permres/cli/cache.hpp"

#include <atomic>
#include <fstream>
#include <iomanip>
#include <memory>
#include <sstream>
#include <stdexcept>

#include <openssl/evp.h>
#include <unistd.h>

namespace permres::cli {

namespace {
const std::string kHeaderPrefix = "permres-cache ";
}

std::string CellKey::canonical() const {
    std::ostringstream os;
    os << kind << ';' << to_string(spec.family) << ';' << spec.n << ';' << spec.kappa << ';' << step << ';' << degree
       << ';' << prime_seed;
    return os.str();
}

std::string CellKey::digest() const { return sha256_hex(canonical()); }

std::string sha256_hex(const std::string& data) {
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1) {
        throw std::runtime_error("SHA-256 digest failed");
    }
    std::ostringstream os;
    os << std::hex << std::setfill('0');
    for (unsigned int i = 0; i < len; ++i) os << std::setw(2) << static_cast<int>(md[i]);
    return os.str();
}

ResultCache::ResultCache(std::filesystem::path dir, std::string version)
    : dir_(std::move(dir)), version_(std::move(version)) {
    std::filesystem::create_directories(dir_);
}

std::filesystem::path ResultCache::path_for(const CellKey& key) const { return dir_ / (key.digest() + ".cell"); }

std::optional<BigInt> ResultCache::get(const CellKey& key) const {
    std::ifstream in(path_for(key));
    if (!in) return std::nullopt;
    std::string header, canonical, value;
    if (!std::getline(in, header) || !std::getline(in, canonical) || !std::getline(in, value)) return std::nullopt;
    if (header != kHeaderPrefix + version_ || canonical != key.canonical()) return std::nullopt;
    try {
        return parse_bigint(value);
    } catch (const std::invalid_argument&) {
        return std::nullopt;
    }
}

void ResultCache::put(const CellKey& key, const BigInt& value) const {
    static std::atomic<std::uint64_t> counter{0};
    const auto target = path_for(key);
    auto tmp = target;
    tmp += ".tmp." + std::to_string(::getpid()) + "." + std::to_string(counter++);
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write cache file " + tmp.string());
        out << kHeaderPrefix << version_ << '\n' << key.canonical() << '\n' << value.str() << '\n';
        out.flush();
        if (!out) throw std::runtime_error("short write to cache file " + tmp.string());
    }
    std::error_code ec;
    std::filesystem::rename(tmp, target, ec);
    if (ec) {
        std::filesystem::remove(tmp, ec);
        throw std::runtime_error("cannot install cache file " + target.string());
    }
}

}  // namespace permres::cli
