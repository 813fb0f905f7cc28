#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace wlab {

/// Exact signed integer used for every count that can grow past 64 bits.
using BigInt = boost::multiprecision::cpp_int;

/// C(n, r) with the convention C(n, r) = 0 when r < 0 or r > n.
inline BigInt binomial(std::int64_t n, std::int64_t r) {
  if (n < 0 || r < 0 || r > n) return 0;
  if (r > n - r) r = n - r;
  BigInt result = 1;
  for (std::int64_t i = 1; i <= r; ++i) {
    result *= n - r + i;
    result /= i;
  }
  return result;
}

inline BigInt pow2(unsigned e) {
  BigInt v = 1;
  v <<= e;
  return v;
}

inline std::string to_string(const BigInt& v) { return v.str(); }

/// Parses an optionally signed decimal literal; returns false on malformed text.
inline bool parse_bigint(const std::string& text, BigInt& out) {
  if (text.empty()) return false;
  std::size_t i = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (i == text.size()) return false;
  for (std::size_t j = i; j < text.size(); ++j)
    if (text[j] < '0' || text[j] > '9') return false;
  out = BigInt(text.substr(i));
  if (text[0] == '-') out = -out;
  return true;
}

}  // namespace wlab
