#ifndef COXCOUNT_VERIFICATION_HPP
#define COXCOUNT_VERIFICATION_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "coxcount/cox_model.hpp"

namespace coxcount {

struct CheckOutcome {
  std::string name;
  bool passed = false;
  std::string detail;
};

// Static grading check: the seven height monomials all have degree (3,-1)
// and a, b, c, xz all have degree (1,0). The table argument exists so a
// harness can demonstrate the check failing on a corrupted table.
CheckOutcome check_grading(const GradingTable& table = kGeneratorDegrees);

// local_density(d, p) equals 1 + 1/p (D1) resp. 1 + 1/p - 1/p^2 (D2) as
// exact rationals for every prime p <= max_prime.
CheckOutcome check_densities(std::int64_t max_prime);

// Fast counts agree with the brute-force oracle for every bound
// 1..max_bound.
CheckOutcome check_oracle_equivalence(DivisorTag d, std::int64_t max_bound);

// Adaptive quadrature agrees with the closed-form region value (= 20) for
// both divisors, within tol.
CheckOutcome check_volume_agreement(double tol);

struct VerifyOptions {
  std::int64_t max_prime = 100;
  std::int64_t max_bound = 200;
  double tol = 1e-3;
};

std::vector<CheckOutcome> run_verification_suite(const VerifyOptions& opts);

}  // namespace coxcount

#endif
