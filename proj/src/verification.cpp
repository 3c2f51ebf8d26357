#include "coxcount/verification.hpp"

#include <cmath>

#include "coxcount/constants.hpp"
#include "coxcount/enumeration.hpp"
#include "coxcount/primes.hpp"

namespace coxcount {

namespace {

Monomial mono(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t x, std::int64_t y,
              std::int64_t z) {
  Monomial m;
  m.exp = {a, b, c, x, y, z};
  return m;
}

}  // namespace

CheckOutcome check_grading(const GradingTable& table) {
  const PicDegree log_anticanonical{3, -1};
  const PicDegree plane{1, 0};
  const Monomial height_monomials[7] = {
      mono(2, 0, 0, 1, 0, 0),  // a^2 x
      mono(0, 2, 0, 1, 0, 0),  // b^2 x
      mono(0, 0, 2, 1, 0, 0),  // c^2 x
      mono(0, 0, 0, 3, 0, 2),  // z^2 x^3
      mono(1, 0, 0, 0, 1, 0),  // a y
      mono(0, 1, 0, 0, 1, 0),  // b y
      mono(0, 0, 1, 0, 1, 0),  // c y
  };
  const Monomial plane_sections[4] = {
      mono(1, 0, 0, 0, 0, 0),
      mono(0, 1, 0, 0, 0, 0),
      mono(0, 0, 1, 0, 0, 0),
      mono(0, 0, 0, 1, 0, 1),  // xz
  };
  for (const Monomial& m : height_monomials)
    if (!(cox_degree(m, table) == log_anticanonical))
      return {"grading", false, "a height monomial is not of degree (3,-1)"};
  for (const Monomial& m : plane_sections)
    if (!(cox_degree(m, table) == plane))
      return {"grading", false, "a plane section is not of degree (1,0)"};
  return {"grading", true, "7 height monomials at (3,-1); a,b,c,xz at (1,0)"};
}

CheckOutcome check_densities(std::int64_t max_prime) {
  std::vector<std::int64_t> primes = sieve_primes(max_prime);
  for (std::int64_t p : primes) {
    for (DivisorTag d : {DivisorTag::D1, DivisorTag::D2}) {
      LocalDensity ld = local_density(d, p);
      if (ld.value != expected_local_density(d, p))
        return {"densities", false,
                std::string(divisor_name(d)) + " density mismatch at p = " + std::to_string(p)};
    }
  }
  return {"densities", true,
          "exact match for all " + std::to_string(primes.size()) + " primes <= " +
              std::to_string(max_prime)};
}

CheckOutcome check_oracle_equivalence(DivisorTag d, std::int64_t max_bound) {
  std::vector<std::int64_t> oracle = oracle_counts_upto(d, max_bound);
  for (std::int64_t b = 1; b <= max_bound; ++b) {
    CountResult fast = count_points(d, b);
    if (fast.count != oracle[static_cast<std::size_t>(b)])
      return {"oracle-" + std::string(divisor_name(d)), false,
              "mismatch at B = " + std::to_string(b) + ": fast " + std::to_string(fast.count) +
                  " vs oracle " + std::to_string(oracle[static_cast<std::size_t>(b)])};
  }
  return {"oracle-" + std::string(divisor_name(d)), true,
          "fast == oracle for all B <= " + std::to_string(max_bound)};
}

CheckOutcome check_volume_agreement(double tol) {
  for (DivisorTag d : {DivisorTag::D1, DivisorTag::D2}) {
    double exact = archimedean_volume_regions(d).total.to_double();
    double numeric;
    try {
      numeric = archimedean_volume_quadrature(d, tol);
    } catch (const std::exception& e) {
      return {"volumes", false, std::string("quadrature failed: ") + e.what()};
    }
    if (std::fabs(numeric - exact) > tol)
      return {"volumes", false,
              std::string(divisor_name(d)) + " quadrature " + std::to_string(numeric) +
                  " vs closed form " + std::to_string(exact)};
  }
  return {"volumes", true, "quadrature matches the closed form for both divisors"};
}

std::vector<CheckOutcome> run_verification_suite(const VerifyOptions& opts) {
  std::vector<CheckOutcome> out;
  out.push_back(check_grading());
  out.push_back(check_densities(opts.max_prime));
  out.push_back(check_oracle_equivalence(DivisorTag::D1, opts.max_bound));
  out.push_back(check_oracle_equivalence(DivisorTag::D2, opts.max_bound));
  out.push_back(check_volume_agreement(opts.tol));
  return out;
}

}  // namespace coxcount
