#pragma once

#include <cstdint>
#include <vector>

#include "wlab/bigint.hpp"
#include "wlab/error.hpp"

namespace wlab::tropical {

/// Number of rational plane curves of degree d through 3d - 1 general points,
/// from Kontsevich's recursion.
inline BigInt kontsevich_oracle(int d) {
  if (d <= 0) throw InputError("degree must be positive");
  std::vector<BigInt> n(d + 1, 0);
  n[1] = 1;
  for (std::int64_t e = 2; e <= d; ++e) {
    BigInt sum = 0;
    for (std::int64_t d1 = 1; d1 < e; ++d1) {
      const std::int64_t d2 = e - d1;
      sum += n[d1] * n[d2] *
             (BigInt(d1 * d1 * d2 * d2) * binomial(3 * e - 4, 3 * d1 - 2) -
              BigInt(d1 * d1 * d1 * d2) * binomial(3 * e - 4, 3 * d1 - 1));
    }
    n[e] = sum;
  }
  return n[d];
}

}  // namespace wlab::tropical
