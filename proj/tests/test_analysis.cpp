#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <cmath>
#include <random>

#include "coxcount/analysis.hpp"
#include "doctest.h"

using namespace coxcount;

namespace {

std::vector<CountResult> synthetic(const std::vector<std::int64_t>& bounds, double c1, double c2) {
  std::vector<CountResult> out;
  for (std::int64_t b : bounds) {
    CountResult r;
    r.divisor = DivisorTag::D1;
    r.bound = b;
    double bd = static_cast<double>(b);
    r.count = static_cast<std::int64_t>(std::llround(c1 * bd * std::log(bd) + c2 * bd));
    out.push_back(r);
  }
  return out;
}

}  // namespace

TEST_CASE("single-row table is definitional") {
  CountResult r;
  r.divisor = DivisorTag::D1;
  r.bound = 10000;
  r.count = 372764;
  std::vector<ConvergenceRow> rows = convergence_table({r}, 4.05);
  REQUIRE(rows.size() == 1);
  double blogb = 10000.0 * std::log(10000.0);
  CHECK(rows[0].ratio == doctest::Approx(372764.0 / blogb).epsilon(1e-14));
  CHECK(rows[0].relative_gap == doctest::Approx(std::fabs(rows[0].ratio - 4.05) / 4.05));
  CHECK(rows[0].residual_per_b ==
        doctest::Approx((372764.0 - 4.05 * blogb) / 10000.0).epsilon(1e-12));
}

TEST_CASE("zero-count rows") {
  CountResult r;
  r.divisor = DivisorTag::D2;
  r.bound = 100;
  r.count = 0;
  std::vector<ConvergenceRow> rows = convergence_table({r}, 2.0);
  CHECK(rows[0].ratio == 0.0);
  CHECK(rows[0].residual_per_b == doctest::Approx(-2.0 * std::log(100.0)));
}

TEST_CASE("table edge cases") {
  CHECK(convergence_table({}, 1.0).empty());
  CountResult r;
  r.bound = 10;
  CHECK_THROWS_AS((void)convergence_table({r}, 0.0), std::invalid_argument);
  CountResult r2 = r;
  r2.divisor = DivisorTag::D2;
  CHECK_THROWS_AS((void)convergence_table({r, r2}, 1.0), std::invalid_argument);
}

TEST_CASE("table is permutation invariant up to the final sort") {
  std::vector<CountResult> results = synthetic({100, 2000, 500, 50}, 3.0, -1.0);
  std::vector<ConvergenceRow> sorted_in = convergence_table(results, 3.0);
  std::reverse(results.begin(), results.end());
  std::vector<ConvergenceRow> reversed_in = convergence_table(results, 3.0);
  REQUIRE(sorted_in.size() == reversed_in.size());
  for (std::size_t i = 0; i < sorted_in.size(); ++i) {
    CHECK(sorted_in[i].bound == reversed_in[i].bound);
    CHECK(sorted_in[i].ratio == reversed_in[i].ratio);
  }
  for (std::size_t i = 1; i < sorted_in.size(); ++i)
    CHECK(sorted_in[i - 1].bound < sorted_in[i].bound);
}

TEST_CASE("two-term fit recovers an exact model") {
  std::vector<std::int64_t> bounds = {1000, 2000, 5000, 10000, 50000, 100000};
  std::vector<std::int64_t> counts;
  for (std::int64_t b : bounds) {
    double bd = static_cast<double>(b);
    counts.push_back(static_cast<std::int64_t>(std::llround(7.0 * bd * std::log(bd) + 3.0 * bd)));
  }
  auto [c1, c2] = fit_two_term(bounds, counts);
  // rounding to integer counts perturbs by < 1; the fit must still be tight
  CHECK(std::fabs(c1 - 7.0) / 7.0 <= 1e-6);
  CHECK(std::fabs(c2 - 3.0) / 3.0 <= 1e-4);
}

TEST_CASE("two-term fit is exact on unrounded model data") {
  std::vector<std::int64_t> bounds = {10, 100, 1000, 10000, 100000};
  std::vector<double> values;
  for (std::int64_t b : bounds) {
    double bd = static_cast<double>(b);
    values.push_back(7.0 * bd * std::log(bd) + 3.0 * bd);
  }
  auto [c1, c2] = fit_two_term(bounds, values);
  CHECK(std::fabs(c1 - 7.0) / 7.0 <= 1e-9);
  CHECK(std::fabs(c2 - 3.0) / 3.0 <= 1e-9);

  values.clear();
  for (std::int64_t b : bounds) {
    double bd = static_cast<double>(b);
    values.push_back(5.0 * bd * std::log(bd));
  }
  auto [d1, d2] = fit_two_term(bounds, values);
  CHECK(std::fabs(d1 - 5.0) / 5.0 <= 1e-9);
  CHECK(std::fabs(d2) <= 1e-7);
}

TEST_CASE("fit input validation") {
  std::vector<std::int64_t> bounds = {10, 10, 10};
  std::vector<std::int64_t> counts = {1, 1, 1};
  CHECK_THROWS_AS((void)fit_two_term(bounds, counts), std::invalid_argument);
  CHECK_THROWS_AS((void)fit_two_term(std::vector<std::int64_t>{10, 20},
                                     std::vector<std::int64_t>{1, 2}),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)fit_two_term(std::vector<std::int64_t>{10, 20, 30},
                                     std::vector<std::int64_t>{1, 2}),
                  std::invalid_argument);
}

TEST_CASE("fit is deterministic") {
  std::vector<CountResult> results = synthetic({100, 300, 1000, 3000, 10000}, 4.05, -0.4);
  auto [a1, a2] = fit_two_term(results);
  auto [b1, b2] = fit_two_term(results);
  CHECK(a1 == b1);
  CHECK(a2 == b2);
}
