// Exact counting arithmetic. Overflow of the counting width is reported by
// std::overflow_error, never wrapped.
#ifndef DIII_CHECKED_HPP
#define DIII_CHECKED_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace diii {

using Count = std::uint64_t;

inline Count checked_add(Count a, Count b) {
  Count r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("counting overflow (64-bit) in addition");
  return r;
}

inline Count checked_mul(Count a, Count b) {
  Count r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("counting overflow (64-bit) in multiplication");
  return r;
}

inline Count checked_pow2(int e) {
  if (e < 0) throw std::domain_error("negative exponent");
  if (e >= 64) throw std::overflow_error("counting overflow (64-bit): 2^" + std::to_string(e));
  return Count{1} << e;
}

/// C(n, k), computed multiplicatively so every intermediate is an integer.
inline Count binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  Count r = 1;
  for (int i = 1; i <= k; ++i) {
    // r * (n - k + i) / i is exact because r = C(n-k+i-1, i-1).
    r = checked_mul(r, static_cast<Count>(n - k + i)) / static_cast<Count>(i);
  }
  return r;
}

/// Product lo * (lo+1) * ... * hi (1 when lo > hi).
inline Count rising_product(int lo, int hi) {
  Count r = 1;
  for (int i = lo; i <= hi; ++i) r = checked_mul(r, static_cast<Count>(i));
  return r;
}

}  // namespace diii

#endif  // DIII_CHECKED_HPP
