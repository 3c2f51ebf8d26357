#ifndef COXCOUNT_CONSTANTS_HPP
#define COXCOUNT_CONSTANTS_HPP

#include <array>
#include <cstdint>

#include "coxcount/cox_model.hpp"
#include "coxcount/quadrature.hpp"
#include "coxcount/rational.hpp"

namespace coxcount {

// A full-dimensional simplicial cone in Z^2 together with a target class,
// both written in the (H, E) degree basis. Columns of `gen` are the cone
// generators.
struct ConeSpec {
  std::array<std::array<std::int64_t, 2>, 2> gen;  // gen[i] = i-th generator
  std::array<std::int64_t, 2> target;
};

// The pseudoeffective cone Cone(E, H-E) with the log-anticanonical class
// 3H - E. Both boundary divisors give the same data.
ConeSpec effective_cone_spec();

// alpha = (1/(rank-1)!) * integral over the dual cone of exp(-<L,t>) dt,
// Haar measure normalized so the dual lattice has covolume one. For a
// simplicial cone with generator matrix G this is
//   1 / ((rank-1)! * |det G| * prod_i <L, g_i^*>),
// g_i^* the dual basis of the generators. Throws if the generators are
// dependent or the target is not interior (some pairing <= 0).
Rational alpha(const ConeSpec& cone);

struct LocalDensity {
  std::int64_t p = 0;
  Rational value;
};

// #U_i(F_p): solutions of a^2 + bc = yz over F_p^6 with (a,b,c,z) != 0,
// (x,y) != (0,0) and b != 0 (D1) resp. a != 0 (D2), divided by (p-1)^2 for
// the free 2-torus action. O(p^3): iterate (a,b,c) and count the (x,y,z)
// fiber in closed form. p must be prime and <= 10^4.
std::int64_t fp_count(DivisorTag d, std::int64_t p);

// Same count by raw O(p^6) enumeration; only sensible for tiny p. Used as an
// independent check of fp_count.
std::int64_t fp_count_bruteforce(DivisorTag d, std::int64_t p);

// fp_count / p^3 as an exact rational. Equals 1 + 1/p for D1 and
// 1 + 1/p - 1/p^2 for D2; that identity is enforced by the verification
// suite, not silently assumed here.
LocalDensity local_density(DivisorTag d, std::int64_t p);

Rational expected_local_density(DivisorTag d, std::int64_t p);

struct EulerProduct {
  double partial = 0.0;     // product over primes <= P
  double tail_bound = 0.0;  // rigorous bound on |log of the omitted factors|
};

// prod_{p <= P} (1 - 1/p) * density(d, p). The renormalized factors are
// 1 - 1/p^2 (D1) and 1 - 2/p^2 + 1/p^3 (D2). The tail uses
// |log factor_p| <= 2/p^2 and sum_{n > P} 2/n^2 <= 2/P.
EulerProduct euler_product(DivisorTag d, std::int64_t prime_bound);

// Archimedean boundary-volume integrand: the full volume is the integral
// over R^2 of 1/max{u^2, v^2, 1, |u^3|, |u^2 v|} (D1, coordinates (a,c) on
// the divisor) resp. 1/max{u^2, v^2, 1, |u^2 v|, |u v^2|} (D2, coordinates
// (b,c)). Both evaluate to 20.
double boundary_density(DivisorTag d, double u, double v);

// Numerical volume: folds signs into the positive quadrant, splits off the
// two single tails and the double tail with u -> u^{-3} substitutions so
// every sub-integrand is bounded, then runs the adaptive engine until the
// local error estimates sum below tol. Throws std::runtime_error when the
// cell budget is exhausted first.
double archimedean_volume_quadrature(DivisorTag d, double tol,
                                     long max_cells_per_piece = 400000);

// The same volume by a closed-form decomposition into three regions, as
// exact rationals. D1 pieces: 20/3, 4, 28/3. D2 pieces: 4, 8, 8 (unit box;
// one coordinate large; both large). Totals are 20 on both sides.
struct RegionVolume {
  std::array<Rational, 3> pieces;
  Rational total;
};
RegionVolume archimedean_volume_regions(DivisorTag d);

// Numerical value of one closed-form region piece (0, 1, 2), for the
// quadrature-vs-closed-form cross check.
double archimedean_piece_quadrature(DivisorTag d, int piece, double tol,
                                    long max_cells_per_piece = 400000);

struct ConstantBreakdown {
  DivisorTag divisor = DivisorTag::D1;
  Rational alpha;
  double tau_infinity_quadrature = 0.0;  // c_R * numerical volume, c_R = 2
  double tau_infinity_regions = 0.0;     // c_R * exact volume
  double euler_partial = 0.0;
  double euler_tail_bound = 0.0;
  double prediction = 0.0;  // alpha * tau_infinity_quadrature * euler_partial
  double prediction_low = 0.0;
  double prediction_high = 0.0;
};

// Assembles the predicted leading constant of the B log B asymptotic,
// with an enclosing interval from the quadrature tolerance and the Euler
// tail bound. For D1 the true value is 40/pi^2.
ConstantBreakdown predicted_constant(DivisorTag d, std::int64_t prime_bound, double tol);

}  // namespace coxcount

#endif
