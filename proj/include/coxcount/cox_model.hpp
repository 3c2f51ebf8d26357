#ifndef COXCOUNT_COX_MODEL_HPP
#define COXCOUNT_COX_MODEL_HPP

#include <array>
#include <cstdint>
#include <string>

#include "coxcount/intmath.hpp"

namespace coxcount {

// The variety under study is the blow-up of P^3 along the conic
// a^2 + bc = 0, d = 0. Its Cox ring is Z[a,b,c,x,y,z]/(a^2 + bc - yz),
// graded by Pic = Z^2; an integral point is a six-tuple of integers on the
// quadric satisfying the two coprimality conditions cut out by the
// irrelevant ideal (a,b,c,z)(x,y).

// Boundary divisor selector. D1 is the (strict transform of the) plane b = 0,
// D2 the plane a = 0; integral points are counted on the complements.
enum class DivisorTag { D1 = 1, D2 = 2 };

const char* divisor_name(DivisorTag d);
DivisorTag divisor_from_name(const std::string& name);

// Coordinates are capped well below the 128-bit comfort zone so that the
// degree-(3,-1) height monomials stay exactly representable.
inline constexpr std::int64_t kCoordLimit = std::int64_t{1} << 40;

struct CoxPoint {
  std::int64_t a = 0, b = 0, c = 0, x = 0, y = 0, z = 0;

  bool operator==(const CoxPoint& o) const = default;
};

// Range-checked construction; throws std::invalid_argument beyond kCoordLimit.
CoxPoint make_cox_point(std::int64_t a, std::int64_t b, std::int64_t c,
                        std::int64_t x, std::int64_t y, std::int64_t z);

struct PicDegree {
  std::int64_t d1 = 0;
  std::int64_t d2 = 0;

  bool operator==(const PicDegree& o) const = default;
};

// Exponent vector over the generators, in the order a, b, c, x, y, z.
struct Monomial {
  std::array<std::int64_t, 6> exp{0, 0, 0, 0, 0, 0};
};

using GradingTable = std::array<PicDegree, 6>;

// deg a = deg b = deg c = (1,0), deg x = (1,-1), deg y = (2,-1), deg z = (0,1).
// Basis: hyperplane pullback H and exceptional class E, written as
// (coefficient of H, coefficient of E) after twisting.
inline constexpr GradingTable kGeneratorDegrees = {{
    {1, 0}, {1, 0}, {1, 0}, {1, -1}, {2, -1}, {0, 1},
}};

PicDegree cox_degree(const Monomial& m);
PicDegree cox_degree(const Monomial& m, const GradingTable& table);

// gcd convention throughout: non-negative, gcd(x, 0) = |x|, gcd of an
// all-zero tuple is 0.
std::int64_t gcd4(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d);

// Membership in the full integral-point set: quadric equation plus
// gcd(a,b,c,z) = gcd(x,y) = 1.
bool is_torsor_point(const CoxPoint& p);

// Membership in the divisor-restricted sets: equation, gcd(x,y) = 1, and
// b = +-1 (D1) resp. a = +-1 (D2). The four-coordinate gcd is automatic.
bool satisfies_divisor_restriction(const CoxPoint& p, DivisorTag d);

// Complement of the accumulating locus: a, x, z nonzero for D1;
// b, c, x, z nonzero for D2.
bool in_open_subvariety(const CoxPoint& p, DivisorTag d);

// Log-anticanonical height
//   max{|a^2 x|, |b^2 x|, |c^2 x|, |z^2 x^3|, |a y|, |b y|, |c y|},
// all seven monomials of degree (3,-1). Exact; throws std::overflow_error
// if an intermediate would not fit 128 bits.
int128 height(const CoxPoint& p);

}  // namespace coxcount

#endif
