#pragma once

#include <cstdint>
#include <stdexcept>

namespace diagsum {

// Exact integer square root: the largest r with r*r <= n.
inline std::uint64_t isqrt(std::uint64_t n) {
  if (n == 0) return 0;
  // Newton iteration from a floating seed, then a correction loop. The seed
  // is within +-2 of the root, so the loops below run O(1) times.
  std::uint64_t r = static_cast<std::uint64_t>(__builtin_sqrtl(
      static_cast<long double>(n)));
  while (r > 0 && r > n / r) --r;               // r*r <= n, overflow-safe
  while ((r + 1) <= n / (r + 1)) ++r;           // maximality
  return r;
}

// floor(n * phi) for the golden ratio phi = (1+sqrt 5)/2, computed exactly
// in integers as floor((n + isqrt(5 n^2)) / 2). No floating point rounding
// can perturb the result: n*sqrt5 is irrational, so the inner floor never
// sits on the discontinuity.
inline std::int64_t beatty_golden(std::int64_t n) {
  if (n < 0) throw std::invalid_argument("beatty_golden: negative index");
  const std::uint64_t un = static_cast<std::uint64_t>(n);
  if (n > 0 && un > UINT64_MAX / 5 / un) {
    throw std::overflow_error("beatty_golden: 5*n^2 exceeds 64 bits");
  }
  const std::uint64_t root = isqrt(5 * un * un);
  return static_cast<std::int64_t>((un + root) / 2);
}

}  // namespace diagsum
