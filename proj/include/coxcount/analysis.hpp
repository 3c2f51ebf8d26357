#ifndef COXCOUNT_ANALYSIS_HPP
#define COXCOUNT_ANALYSIS_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "coxcount/enumeration.hpp"

namespace coxcount {

// One diagnostic row comparing an exact count against c * B log B.
// log is the natural logarithm throughout.
struct ConvergenceRow {
  std::int64_t bound = 0;
  std::int64_t count = 0;
  double ratio = 0.0;           // count / (B log B)
  double prediction = 0.0;      // the constant c
  double relative_gap = 0.0;    // |ratio - c| / c
  double residual_per_b = 0.0;  // (count - c B log B) / B
};

// Rows ordered by bound; results must share one divisor and c must be
// positive. Empty input yields an empty table.
std::vector<ConvergenceRow> convergence_table(const std::vector<CountResult>& results,
                                              double prediction);

// Least squares fit of count ~ c1 * B log B + c2 * B over the given results.
// Needs at least three results with distinct bounds; throws on a singular
// design. Deterministic for a fixed input order.
std::pair<double, double> fit_two_term(const std::vector<CountResult>& results);
std::pair<double, double> fit_two_term(const std::vector<std::int64_t>& bounds,
                                       const std::vector<std::int64_t>& counts);
std::pair<double, double> fit_two_term(const std::vector<std::int64_t>& bounds,
                                       const std::vector<double>& values);

}  // namespace coxcount

#endif
