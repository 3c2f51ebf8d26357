#ifndef COXCOUNT_INTMATH_HPP
#define COXCOUNT_INTMATH_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace coxcount {

using int128 = __int128;

// Overflow-checked arithmetic. All exact integer work in this project goes
// through these helpers; an out-of-range intermediate throws instead of
// wrapping.
inline int128 add_checked(int128 a, int128 b) {
  int128 r;
  if (__builtin_add_overflow(a, b, &r))
    throw std::overflow_error("integer addition overflow");
  return r;
}

inline int128 sub_checked(int128 a, int128 b) {
  int128 r;
  if (__builtin_sub_overflow(a, b, &r))
    throw std::overflow_error("integer subtraction overflow");
  return r;
}

inline int128 mul_checked(int128 a, int128 b) {
  int128 r;
  if (__builtin_mul_overflow(a, b, &r))
    throw std::overflow_error("integer multiplication overflow");
  return r;
}

inline int128 abs128(int128 v) { return v < 0 ? -v : v; }

std::string to_string_int128(int128 v);

// floor(sqrt(n)) for n >= 0.
std::int64_t isqrt64(std::int64_t n);

// largest t >= 0 with t^3 <= n, for n >= 0.
std::int64_t icbrt64(std::int64_t n);

std::int64_t gcd64(std::int64_t a, std::int64_t b);
int128 gcd128(int128 a, int128 b);

}  // namespace coxcount

#endif
