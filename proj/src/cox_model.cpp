#include "coxcount/cox_model.hpp"

#include <algorithm>
#include <stdexcept>

namespace coxcount {

const char* divisor_name(DivisorTag d) {
  return d == DivisorTag::D1 ? "D1" : "D2";
}

DivisorTag divisor_from_name(const std::string& name) {
  if (name == "D1" || name == "d1") return DivisorTag::D1;
  if (name == "D2" || name == "d2") return DivisorTag::D2;
  throw std::invalid_argument("unknown divisor tag: " + name);
}

CoxPoint make_cox_point(std::int64_t a, std::int64_t b, std::int64_t c,
                        std::int64_t x, std::int64_t y, std::int64_t z) {
  for (std::int64_t v : {a, b, c, x, y, z}) {
    if (v > kCoordLimit || v < -kCoordLimit)
      throw std::invalid_argument("Cox coordinate exceeds the exact-arithmetic cap");
  }
  return CoxPoint{a, b, c, x, y, z};
}

PicDegree cox_degree(const Monomial& m) { return cox_degree(m, kGeneratorDegrees); }

PicDegree cox_degree(const Monomial& m, const GradingTable& table) {
  PicDegree deg;
  for (std::size_t i = 0; i < 6; ++i) {
    if (m.exp[i] < 0) throw std::invalid_argument("Monomial exponents must be non-negative");
    deg.d1 += m.exp[i] * table[i].d1;
    deg.d2 += m.exp[i] * table[i].d2;
  }
  return deg;
}

std::int64_t gcd4(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
  return gcd64(gcd64(a, b), gcd64(c, d));
}

namespace {

bool on_quadric(const CoxPoint& p) {
  // a^2 + bc - yz = 0, evaluated exactly in 128 bits.
  int128 lhs = add_checked(mul_checked(p.a, p.a), mul_checked(p.b, p.c));
  return sub_checked(lhs, mul_checked(p.y, p.z)) == 0;
}

}  // namespace

bool is_torsor_point(const CoxPoint& p) {
  if (!on_quadric(p)) return false;
  if (gcd4(p.a, p.b, p.c, p.z) != 1) return false;
  return gcd64(p.x, p.y) == 1;
}

bool satisfies_divisor_restriction(const CoxPoint& p, DivisorTag d) {
  std::int64_t unit = (d == DivisorTag::D1) ? p.b : p.a;
  if (unit != 1 && unit != -1) return false;
  if (gcd64(p.x, p.y) != 1) return false;
  return on_quadric(p);
}

bool in_open_subvariety(const CoxPoint& p, DivisorTag d) {
  if (d == DivisorTag::D1) return p.a != 0 && p.x != 0 && p.z != 0;
  return p.b != 0 && p.c != 0 && p.x != 0 && p.z != 0;
}

int128 height(const CoxPoint& p) {
  const int128 a = p.a, b = p.b, c = p.c, x = p.x, y = p.y, z = p.z;
  int128 m0 = abs128(mul_checked(mul_checked(a, a), x));
  int128 m1 = abs128(mul_checked(mul_checked(b, b), x));
  int128 m2 = abs128(mul_checked(mul_checked(c, c), x));
  int128 m3 = abs128(mul_checked(mul_checked(z, z), mul_checked(mul_checked(x, x), x)));
  int128 m4 = abs128(mul_checked(a, y));
  int128 m5 = abs128(mul_checked(b, y));
  int128 m6 = abs128(mul_checked(c, y));
  return std::max({m0, m1, m2, m3, m4, m5, m6});
}

}  // namespace coxcount
