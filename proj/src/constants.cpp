#include "coxcount/constants.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "coxcount/primes.hpp"

namespace coxcount {

ConeSpec effective_cone_spec() {
  // generators E = (0,1) and H - E = (1,-1); target 3H - E = (3,-1)
  return ConeSpec{{{{0, 1}, {1, -1}}}, {3, -1}};
}

Rational alpha(const ConeSpec& cone) {
  const auto& g1 = cone.gen[0];
  const auto& g2 = cone.gen[1];
  int128 det = sub_checked(mul_checked(g1[0], g2[1]), mul_checked(g1[1], g2[0]));
  if (det == 0) throw std::invalid_argument("alpha: cone generators are dependent");

  // <L, g_i^*> with (g_1^*, g_2^*) the rows of the inverse generator matrix
  Rational det_r(det, 1);
  Rational c1 = Rational(sub_checked(mul_checked(g2[1], cone.target[0]),
                                     mul_checked(g2[0], cone.target[1])),
                         1) /
                det_r;
  Rational c2 = Rational(sub_checked(mul_checked(g1[0], cone.target[1]),
                                     mul_checked(g1[1], cone.target[0])),
                         1) /
                det_r;
  if (c1 <= Rational(0) || c2 <= Rational(0))
    throw std::invalid_argument("alpha: target class is not interior to the cone");

  // characteristic function of the cone at the target, lattice-normalized:
  // substituting u = G^T t shows the integral is 1/(|det G| c1 c2).
  Rational chi = Rational(1) / (Rational(abs128(det), 1) * c1 * c2);
  // rank 2, so the leading (rank-1)! is 1; kept explicit for clarity
  const std::int64_t rank_minus_one_factorial = 1;
  return chi / Rational(rank_minus_one_factorial);
}

namespace {

void require_small_prime(std::int64_t p) {
  if (p > 10000) throw std::invalid_argument("fp_count: prime exceeds the 10^4 cap");
  if (!is_prime(p)) throw std::invalid_argument("fp_count: argument is not prime");
}

}  // namespace

std::int64_t fp_count(DivisorTag d, std::int64_t p) {
  require_small_prime(p);
  // Iterate the (a,b,c) block (with the divisor's unit coordinate nonzero)
  // and count the (x,y,z) fiber of each residue m = a^2 + bc:
  //   m != 0: p-1 pairs (y,z) with yz = m, all with y != 0, so p choices of x
  //   m == 0: p pairs with y = 0 (x != 0 forced: p-1 choices) and p-1 pairs
  //           with y != 0, z = 0 (p choices of x)
  // i.e. p(p-1) per triple plus an extra p(p-1) when m vanishes. The locus
  // (a,b,c,z) = 0 never meets b != 0 resp. a != 0. Finally divide by the
  // (p-1)^2 torus orbits.
  std::int64_t triples = 0;
  std::int64_t zero_m = 0;
  const bool restrict_b = (d == DivisorTag::D1);
  for (std::int64_t a = 0; a < p; ++a) {
    if (!restrict_b && a == 0) continue;
    std::int64_t aa = (a * a) % p;
    for (std::int64_t b = 0; b < p; ++b) {
      if (restrict_b && b == 0) continue;
      for (std::int64_t c = 0; c < p; ++c) {
        ++triples;
        if ((aa + b * c) % p == 0) ++zero_m;
      }
    }
  }
  std::int64_t num = p * (triples + zero_m);
  if (num % (p - 1) != 0) throw std::overflow_error("fp_count: unexpected non-divisibility");
  return num / (p - 1);
}

std::int64_t fp_count_bruteforce(DivisorTag d, std::int64_t p) {
  require_small_prime(p);
  if (p > 7) throw std::invalid_argument("fp_count_bruteforce: p too large for O(p^6)");
  std::int64_t raw = 0;
  for (std::int64_t a = 0; a < p; ++a)
    for (std::int64_t b = 0; b < p; ++b)
      for (std::int64_t c = 0; c < p; ++c)
        for (std::int64_t x = 0; x < p; ++x)
          for (std::int64_t y = 0; y < p; ++y)
            for (std::int64_t z = 0; z < p; ++z) {
              if ((a * a + b * c - y * z) % p != 0) continue;
              if (a == 0 && b == 0 && c == 0 && z == 0) continue;
              if (x == 0 && y == 0) continue;
              if (d == DivisorTag::D1 ? b == 0 : a == 0) continue;
              ++raw;
            }
  std::int64_t orbits = (p - 1) * (p - 1);
  if (raw % orbits != 0)
    throw std::overflow_error("fp_count_bruteforce: count not divisible by (p-1)^2");
  return raw / orbits;
}

LocalDensity local_density(DivisorTag d, std::int64_t p) {
  std::int64_t n = fp_count(d, p);
  return LocalDensity{p, Rational(n, 1) / Rational(mul_checked(mul_checked(p, p), p), 1)};
}

Rational expected_local_density(DivisorTag d, std::int64_t p) {
  Rational one(1), pr(p);
  if (d == DivisorTag::D1) return one + one / pr;
  return one + one / pr - one / (pr * pr);
}

EulerProduct euler_product(DivisorTag d, std::int64_t prime_bound) {
  if (prime_bound < 2) throw std::invalid_argument("euler_product: prime bound must be >= 2");
  std::vector<std::int64_t> primes = sieve_primes(prime_bound);
  double prod = 1.0;
  for (std::int64_t p : primes) {
    double pd = static_cast<double>(p);
    double p2 = pd * pd;
    double factor = (d == DivisorTag::D1) ? 1.0 - 1.0 / p2
                                          : 1.0 - 2.0 / p2 + 1.0 / (p2 * pd);
    prod *= factor;
  }
  // e^{-2/p^2} <= factor_p < 1 for p >= 2, so the omitted log mass is at most
  // sum_{p > P} 2/p^2 <= sum_{n > P} 2/n^2 <= 2/P.
  return EulerProduct{prod, 2.0 / static_cast<double>(prime_bound)};
}

namespace {

// monomial exponent pairs (i, j) for u^i v^j entering the max
struct DensityMonomials {
  int n = 0;
  int iu[5];
  int iv[5];
};

DensityMonomials density_monomials(DivisorTag d) {
  if (d == DivisorTag::D1) return {5, {2, 0, 0, 3, 2}, {0, 2, 0, 0, 1}};
  return {5, {2, 0, 0, 2, 1}, {0, 2, 0, 1, 2}};
}

double ipow(double b, int e) {
  double r = 1.0;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

double monomial_max(const DensityMonomials& mono, double s, double t) {
  double m = 0.0;
  for (int k = 0; k < mono.n; ++k) m = std::max(m, ipow(s, mono.iu[k]) * ipow(t, mono.iv[k]));
  return m;
}

double integrate_or_throw(const std::function<double(double, double)>& f, double target,
                          long max_cells) {
  QuadratureOutcome out = integrate_unit_square(f, QuadratureOptions{target, max_cells});
  if (!out.converged)
    throw std::runtime_error("quadrature did not converge within the cell budget");
  return out.value;
}

// The volume integral split into unit box, the two single tails and the
// double tail, each mapped onto (0,1)^2. Tails substitute s = w^{-3}; the
// cubic power keeps the transformed integrand bounded all the way into the
// corner where both variables are large.
double quadrant_integral(DivisorTag d, double tol, long max_cells) {
  DensityMonomials mono = density_monomials(d);
  auto dens = [&mono](double s, double t) { return 1.0 / monomial_max(mono, s, t); };

  auto box = [&](double s, double t) { return dens(s, t); };
  auto tail_s = [&](double w, double t) {
    double s = 1.0 / (w * w * w);
    return dens(s, t) * 3.0 / (w * w * w * w);
  };
  auto tail_t = [&](double s, double w) {
    double t = 1.0 / (w * w * w);
    return dens(s, t) * 3.0 / (w * w * w * w);
  };
  auto tail_both = [&](double w, double q) {
    double s = 1.0 / (w * w * w);
    double t = 1.0 / (q * q * q);
    return dens(s, t) * 9.0 / (w * w * w * w * q * q * q * q);
  };

  // the error estimates are estimates, not bounds; aim an order of magnitude
  // below the requested tolerance, split over the four pieces
  double share = tol * 0.1 / 4.0;
  double v = 0.0;
  v += integrate_or_throw(box, share, max_cells);
  v += integrate_or_throw(tail_s, share, max_cells);
  v += integrate_or_throw(tail_t, share, max_cells);
  v += integrate_or_throw(tail_both, share, max_cells);
  return 4.0 * v;  // the density is even in both coordinates
}

}  // namespace

double boundary_density(DivisorTag d, double u, double v) {
  DensityMonomials mono = density_monomials(d);
  return 1.0 / monomial_max(mono, std::fabs(u), std::fabs(v));
}

double archimedean_volume_quadrature(DivisorTag d, double tol, long max_cells_per_piece) {
  if (!(tol > 0.0)) throw std::invalid_argument("archimedean volume: tol must be positive");
  return quadrant_integral(d, tol, max_cells_per_piece);
}

// Each closed-form region is mapped onto [0,1]^2 so the reciprocal of its
// dominating monomial becomes a smooth integrand; the adaptive engine then
// integrates numbers, not indicator functions. All maps are one quadrant;
// the final factor 4 restores the sign classes.
double archimedean_piece_quadrature(DivisorTag d, int piece, double tol,
                                    long max_cells_per_piece) {
  if (piece < 0 || piece > 2) throw std::invalid_argument("piece index out of range");
  if (!(tol > 0.0)) throw std::invalid_argument("archimedean volume: tol must be positive");
  DensityMonomials mono = density_monomials(d);
  auto dens = [&mono](double s, double t) { return 1.0 / monomial_max(mono, s, t); };
  auto I = [&](const std::function<double(double, double)>& f, double target) {
    return integrate_or_throw(f, target, max_cells_per_piece);
  };
  const double target = tol * 0.1;

  if (d == DivisorTag::D1) {
    switch (piece) {
      case 0: {
        // s <= 1, s^2 t <= 1. Unit box plus the sliver t in [1, s^-2]:
        // with t = w^-3, s = w^{3/2} sigma the sliver integrand t^-2 ds dt
        // becomes 3 w^{7/2}.
        double box = I([&](double s, double t) { return dens(s, t); }, target / 2);
        double sliver = I([](double sigma, double w) {
          (void)sigma;
          return 3.0 * std::pow(w, 3.5);
        }, target / 2);
        return 4.0 * (box + sliver);
      }
      case 1: {
        // s > 1, t <= s: density s^-3; with s = w^-3, t = s tau this is 3w^2.
        double wedge = I([](double tau, double w) {
          (void)tau;
          return 3.0 * w * w;
        }, target);
        return 4.0 * wedge;
      }
      case 2: {
        // t > s, s^2 t > 1, split where the max switches between s^2 t and t^2.
        // (i) s < t < s^2 (so s > 1), density 1/(s^2 t): s = w^-3, t = s^{1+u}
        //     gives 9 w^2 |log w|.
        double wedge = I([](double u, double w) {
          (void)u;
          return w > 0.0 ? -9.0 * w * w * std::log(w) : 0.0;
        }, target / 3);
        // (ii) t above the lower envelope max(s^-2, s, s^2), density t^-2;
        //      the t-integral is exact, 1/envelope, and t = envelope/q^3
        //      turns it into 3 q^2 s^2 (s <= 1) resp. 9 q^2 w^2 (s = w^-3 > 1).
        double upper_in = I([](double q, double s) { return 3.0 * q * q * s * s; }, target / 3);
        double upper_out = I([](double q, double w) { return 9.0 * q * q * w * w; }, target / 3);
        return 4.0 * (wedge + upper_in + upper_out);
      }
    }
  } else {
    switch (piece) {
      case 0: {
        // max(s,t) <= 1: the density is identically 1 there.
        double box = I([&](double s, double t) { return dens(s, t); }, target);
        return 4.0 * box;
      }
      case 1: {
        // exactly one coordinate beyond 1: two wings, equal by the s<->t
        // symmetry of the density; on s > 1 >= t the density is s^-2, and
        // s = w^-3 gives 3w^2.
        double wing = I([](double t, double w) {
          (void)t;
          return 3.0 * w * w;
        }, target);
        return 4.0 * 2.0 * wing;
      }
      case 2: {
        // both beyond 1, folded onto 1 <= t <= s where the density is
        // 1/(s^2 t); s = w^-3, t = s^u gives 9 w^2 |log w|, doubled for the
        // symmetric half.
        double half = I([](double u, double w) {
          (void)u;
          return w > 0.0 ? -9.0 * w * w * std::log(w) : 0.0;
        }, target);
        return 4.0 * 2.0 * half;
      }
    }
  }
  throw std::invalid_argument("piece index out of range");
}

RegionVolume archimedean_volume_regions(DivisorTag d) {
  RegionVolume rv;
  if (d == DivisorTag::D1) {
    // Region |u| <= 1, |u^2 v| <= 1: density 1/max{1, v^2}. The u-section has
    // length 2 min{1, |v|^{-1/2}}, so the piece is
    //   int_{|v|<=1} 2 dv + int_{|v|>1} 2 |v|^{-5/2} dv = 4 + 8/3.
    rv.pieces[0] = Rational(4) + Rational(8, 3);
    // Region |u| > 1, |v| <= |u|: density 1/|u|^3, v-section length 2|u|,
    // so int_{|u|>1} 2 u^{-2} du = 4.
    rv.pieces[1] = Rational(4);
    // Region |v| > |u|, |u^2 v| > 1: density 1/max{v^2, u^2 |v|}. Where
    // u^2 > |v|: int_{|v|>=1} (2/|v|)(|v|^{-1/2} - |v|^{-1}) dv = 4. Where
    // u^2 <= |v|: int 2/max{u^2, u^{-2}} du = 4/3 + 4. Total 28/3.
    rv.pieces[2] = Rational(4) + Rational(4, 3) + Rational(4);
  } else {
    // The D2 density is symmetric in (|u|,|v|); fold onto 0 < v < u and
    // multiply by 8. On the fold the max is max{u^2, 1, u^2 v}.
    // Unit box max{|u|,|v|} <= 1: density 1, area 4.
    rv.pieces[0] = Rational(4);
    // One coordinate beyond 1: fold v <= 1 < u, density u^{-2};
    // 8 int_{u>1} u^{-2} du = 8.
    rv.pieces[1] = Rational(8);
    // Both beyond 1: fold 1 < v < u, density 1/(u^2 v);
    // 8 int_{u>1} log(u) u^{-2} du = 8.
    rv.pieces[2] = Rational(8);
  }
  rv.total = rv.pieces[0] + rv.pieces[1] + rv.pieces[2];
  return rv;
}

ConstantBreakdown predicted_constant(DivisorTag d, std::int64_t prime_bound, double tol) {
  ConstantBreakdown out;
  out.divisor = d;
  out.alpha = alpha(effective_cone_spec());
  double vol = archimedean_volume_quadrature(d, tol);
  RegionVolume rv = archimedean_volume_regions(d);
  EulerProduct ep = euler_product(d, prime_bound);

  const double c_real = 2.0;  // renormalization at the one real place
  out.tau_infinity_quadrature = c_real * vol;
  out.tau_infinity_regions = c_real * rv.total.to_double();
  out.euler_partial = ep.partial;
  out.euler_tail_bound = ep.tail_bound;

  double a = out.alpha.to_double();
  out.prediction = a * out.tau_infinity_quadrature * ep.partial;
  // every omitted Euler factor is < 1 and their log mass is <= tail_bound
  out.prediction_low = a * c_real * (vol - tol) * ep.partial * std::exp(-ep.tail_bound);
  out.prediction_high = a * c_real * (vol + tol) * ep.partial;
  return out;
}

}  // namespace coxcount
