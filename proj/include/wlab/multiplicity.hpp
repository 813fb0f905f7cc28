#pragma once

// The two k-th multiplicities of a real rational curve meeting a real
// (-2)-curve E transversally, and the complex attachment weight.

#include <cstdint>
#include <vector>

#include "wlab/bigint.hpp"
#include "wlab/error.hpp"

namespace wlab {

/// Intersection pattern of a real curve with E: alpha real points and beta
/// pairs of complex conjugated points.
struct TangencyProfile {
  std::uint32_t alpha = 0;
  std::uint32_t beta = 0;

  std::int64_t points() const { return std::int64_t{alpha} + 2 * std::int64_t{beta}; }
  friend bool operator==(const TangencyProfile&, const TangencyProfile&) = default;
};

/// A class of identical curves in R_k, collapsed into one record with a count.
struct CurveRecord {
  std::uint32_t k = 0;
  std::uint32_t mass = 0;          // solitary real nodes
  std::uint32_t mass_in_s = 0;     // solitary real nodes lying in S
  TangencyProfile profile;
  BigInt count = 1;

  void validate() const {
    if (mass_in_s > mass) throw InputError("m_in_s exceeds m");
    if (count <= 0) throw InputError("curve record count must be positive");
  }
};

namespace detail {
inline int parity_sign(std::uint64_t e) { return (e % 2 == 0) ? 1 : -1; }
}  // namespace detail

/// (-1)^m * sum over k = a_k + 2 b_k of C(alpha, a_k) C(beta, b_k).
inline BigInt mu_plus(std::uint32_t m, std::uint32_t alpha, std::uint32_t beta, std::uint32_t k) {
  BigInt sum = 0;
  for (std::int64_t bk = 0; 2 * bk <= std::int64_t{k}; ++bk) {
    const std::int64_t ak = std::int64_t{k} - 2 * bk;
    sum += binomial(alpha, ak) * binomial(beta, bk);
  }
  return detail::parity_sign(m) * sum;
}

/// (-1)^(m + beta) 2^beta when alpha = 0 and k = beta, zero otherwise.
inline BigInt mu_minus(std::uint32_t m, std::uint32_t alpha, std::uint32_t beta, std::uint32_t k) {
  if (alpha != 0 || k != beta) return 0;
  return detail::parity_sign(std::uint64_t{m} + beta) * pow2(beta);
}

/// Coefficients of (-1)^m (1+x)^alpha (1+x^2)^beta, lowest degree first.
inline std::vector<BigInt> mu_plus_series(std::uint32_t m, std::uint32_t alpha, std::uint32_t beta) {
  std::vector<BigInt> poly{BigInt(detail::parity_sign(m))};
  auto multiply = [&poly](std::size_t shift) {
    std::vector<BigInt> next(poly.size() + shift, 0);
    for (std::size_t i = 0; i < poly.size(); ++i) {
      next[i] += poly[i];
      next[i + shift] += poly[i];
    }
    poly = std::move(next);
  };
  for (std::uint32_t i = 0; i < alpha; ++i) multiply(1);
  for (std::uint32_t i = 0; i < beta; ++i) multiply(2);
  return poly;
}

/// C(alpha + 2 beta, k): ways to pick the k attachment points among all
/// intersection points with E when reality is ignored.
inline BigInt complex_weight(std::uint32_t alpha, std::uint32_t beta, std::uint32_t k) {
  return binomial(std::int64_t{alpha} + 2 * std::int64_t{beta}, k);
}

}  // namespace wlab
