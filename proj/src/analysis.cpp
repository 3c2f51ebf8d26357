#include "coxcount/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace coxcount {

std::vector<ConvergenceRow> convergence_table(const std::vector<CountResult>& results,
                                              double prediction) {
  if (!(prediction > 0.0))
    throw std::invalid_argument("convergence_table: prediction must be positive");
  for (const CountResult& r : results)
    if (r.divisor != results.front().divisor)
      throw std::invalid_argument("convergence_table: results mix divisors");

  std::vector<ConvergenceRow> rows;
  rows.reserve(results.size());
  for (const CountResult& r : results) {
    ConvergenceRow row;
    row.bound = r.bound;
    row.count = r.count;
    double blogb = static_cast<double>(r.bound) * std::log(static_cast<double>(r.bound));
    row.ratio = static_cast<double>(r.count) / blogb;
    row.prediction = prediction;
    row.relative_gap = std::fabs(row.ratio - prediction) / prediction;
    row.residual_per_b =
        (static_cast<double>(r.count) - prediction * blogb) / static_cast<double>(r.bound);
    rows.push_back(row);
  }
  std::sort(rows.begin(), rows.end(),
            [](const ConvergenceRow& a, const ConvergenceRow& b) { return a.bound < b.bound; });
  return rows;
}

std::pair<double, double> fit_two_term(const std::vector<std::int64_t>& bounds,
                                       const std::vector<double>& values) {
  if (bounds.size() != values.size())
    throw std::invalid_argument("fit_two_term: bounds/values size mismatch");
  if (bounds.size() < 3) throw std::invalid_argument("fit_two_term: need at least 3 results");

  std::int64_t first = bounds.front();
  bool all_equal = std::all_of(bounds.begin(), bounds.end(),
                               [first](std::int64_t b) { return b == first; });
  if (all_equal) throw std::invalid_argument("fit_two_term: singular design, all bounds equal");

  // normal equations for the design {B log B, B}, in extended precision
  long double suu = 0, suv = 0, svv = 0, suy = 0, svy = 0;
  for (std::size_t i = 0; i < bounds.size(); ++i) {
    long double b = static_cast<long double>(bounds[i]);
    long double u = b * std::log(b);
    long double v = b;
    long double y = static_cast<long double>(values[i]);
    suu += u * u;
    suv += u * v;
    svv += v * v;
    suy += u * y;
    svy += v * y;
  }
  long double det = suu * svv - suv * suv;
  if (!(std::fabs(static_cast<double>(det)) > 0.0) ||
      std::fabs(static_cast<double>(det)) < 1e-12 * static_cast<double>(suu * svv))
    throw std::invalid_argument("fit_two_term: singular design");
  long double c1 = (suy * svv - svy * suv) / det;
  long double c2 = (svy * suu - suy * suv) / det;
  return {static_cast<double>(c1), static_cast<double>(c2)};
}

std::pair<double, double> fit_two_term(const std::vector<std::int64_t>& bounds,
                                       const std::vector<std::int64_t>& counts) {
  std::vector<double> values(counts.begin(), counts.end());
  return fit_two_term(bounds, values);
}

std::pair<double, double> fit_two_term(const std::vector<CountResult>& results) {
  std::vector<std::int64_t> bounds, counts;
  bounds.reserve(results.size());
  counts.reserve(results.size());
  for (const CountResult& r : results) {
    bounds.push_back(r.bound);
    counts.push_back(r.count);
  }
  return fit_two_term(bounds, counts);
}

}  // namespace coxcount
