#include "coxcount/intmath.hpp"

#include <cmath>

namespace coxcount {

std::string to_string_int128(int128 v) {
  if (v == 0) return "0";
  bool neg = v < 0;
  unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1
                            : static_cast<unsigned __int128>(v);
  std::string s;
  while (u > 0) {
    s += static_cast<char>('0' + static_cast<int>(u % 10));
    u /= 10;
  }
  if (neg) s += '-';
  return std::string(s.rbegin(), s.rend());
}

std::int64_t isqrt64(std::int64_t n) {
  if (n < 0) throw std::invalid_argument("isqrt64: negative argument");
  if (n == 0) return 0;
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && r > n / r) --r;
  while ((r + 1) <= n / (r + 1)) ++r;
  return r;
}

std::int64_t icbrt64(std::int64_t n) {
  if (n < 0) throw std::invalid_argument("icbrt64: negative argument");
  if (n == 0) return 0;
  auto r = static_cast<std::int64_t>(std::cbrt(static_cast<double>(n)));
  auto cube_leq = [n](std::int64_t t) {
    if (t <= 0) return true;
    if (t > 2097151) return false;  // 2097152^3 > 2^63-1
    return t * t * t <= n;
  };
  while (!cube_leq(r)) --r;
  while (cube_leq(r + 1)) ++r;
  return r;
}

std::int64_t gcd64(std::int64_t a, std::int64_t b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    std::int64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

int128 gcd128(int128 a, int128 b) {
  a = abs128(a);
  b = abs128(b);
  while (b != 0) {
    int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace coxcount
