#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace permres {

/// Arbitrary-precision integer used for every dimension count.
using BigInt = boost::multiprecision::cpp_int;

/// Binomial coefficient C(n, k); zero when k < 0, n < 0 or k > n.
BigInt binomial(std::int64_t n, std::int64_t k);

BigInt factorial(std::int64_t n);

inline std::string to_string(const BigInt& value) { return value.str(); }

/// Parses a decimal integer; throws std::invalid_argument on malformed input.
BigInt parse_bigint(const std::string& text);

}  // namespace permres
