// Exercises the extern-C surface of the shared library.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <cstring>
#include <vector>

#include "coxcount.h"
#include "doctest.h"

namespace {

struct Engine {
  coxcount_engine* ptr = coxcount_engine_new();
  ~Engine() { coxcount_engine_free(ptr); }
};

}  // namespace

TEST_CASE("engine lifecycle and shard validation") {
  Engine e;
  REQUIRE(e.ptr != nullptr);
  CHECK(coxcount_engine_set_shards(e.ptr, 4) == COXCOUNT_OK);
  CHECK(coxcount_engine_set_shards(e.ptr, 0) == COXCOUNT_ERR_INVALID);
  CHECK(coxcount_engine_set_shards(e.ptr, 2000) == COXCOUNT_ERR_INVALID);
  CHECK(coxcount_engine_set_shards(nullptr, 1) == COXCOUNT_ERR_INVALID);
}

TEST_CASE("counting through the C API") {
  Engine e;
  coxcount_count_result fast{}, oracle{};
  REQUIRE(coxcount_count(e.ptr, COXCOUNT_D1, 100, COXCOUNT_METHOD_FAST, &fast) == COXCOUNT_OK);
  REQUIRE(coxcount_count(e.ptr, COXCOUNT_D1, 100, COXCOUNT_METHOD_ORACLE, &oracle) ==
          COXCOUNT_OK);
  CHECK(fast.count == oracle.count);
  CHECK(fast.bound == 100);
  CHECK(fast.divisor == COXCOUNT_D1);
  CHECK(fast.elapsed_seconds >= 0.0);

  coxcount_count_result d2{};
  REQUIRE(coxcount_count(e.ptr, COXCOUNT_D2, 1, COXCOUNT_METHOD_FAST, &d2) == COXCOUNT_OK);
  CHECK(d2.count == 4);

  CHECK(coxcount_count(e.ptr, 7, 10, COXCOUNT_METHOD_FAST, &fast) == COXCOUNT_ERR_INVALID);
  CHECK(coxcount_count(e.ptr, COXCOUNT_D1, 0, COXCOUNT_METHOD_FAST, &fast) ==
        COXCOUNT_ERR_INVALID);
  CHECK(coxcount_count(e.ptr, COXCOUNT_D1, 501, COXCOUNT_METHOD_ORACLE, &fast) ==
        COXCOUNT_ERR_INVALID);
  CHECK(coxcount_count(e.ptr, COXCOUNT_D1, 10, 9, &fast) == COXCOUNT_ERR_INVALID);
  CHECK(coxcount_count(nullptr, COXCOUNT_D1, 10, COXCOUNT_METHOD_FAST, &fast) ==
        COXCOUNT_ERR_INVALID);
}

TEST_CASE("densities, alpha and regions as 64-bit rationals") {
  coxcount_rational r{};
  REQUIRE(coxcount_local_density(COXCOUNT_D1, 5, &r) == COXCOUNT_OK);
  CHECK(r.num == 6);
  CHECK(r.den == 5);
  REQUIRE(coxcount_local_density(COXCOUNT_D2, 5, &r) == COXCOUNT_OK);
  CHECK(r.num == 29);
  CHECK(r.den == 25);
  CHECK(coxcount_local_density(COXCOUNT_D1, 6, &r) == COXCOUNT_ERR_INVALID);

  int64_t n = 0;
  REQUIRE(coxcount_fp_point_count(COXCOUNT_D2, 3, &n) == COXCOUNT_OK);
  CHECK(n == 33);

  REQUIRE(coxcount_alpha(&r) == COXCOUNT_OK);
  CHECK(r.num == 1);
  CHECK(r.den == 6);

  coxcount_rational pieces[3], total{};
  REQUIRE(coxcount_archimedean_regions(COXCOUNT_D1, pieces, &total) == COXCOUNT_OK);
  CHECK(pieces[0].num == 20);
  CHECK(pieces[0].den == 3);
  CHECK(pieces[1].num == 4);
  CHECK(pieces[2].num == 28);
  CHECK(pieces[2].den == 3);
  CHECK(total.num == 20);
  CHECK(total.den == 1);
}

TEST_CASE("euler product and archimedean volume") {
  double partial = 0.0, tail = 0.0;
  REQUIRE(coxcount_euler_product(COXCOUNT_D2, 2, &partial, &tail) == COXCOUNT_OK);
  CHECK(partial == 0.625);
  CHECK(tail == 1.0);
  CHECK(coxcount_euler_product(COXCOUNT_D1, 1, &partial, &tail) == COXCOUNT_ERR_INVALID);

  Engine e;
  double vol = 0.0;
  REQUIRE(coxcount_archimedean_volume(e.ptr, COXCOUNT_D2, 1e-3, &vol) == COXCOUNT_OK);
  CHECK(std::fabs(vol - 20.0) <= 1e-3);
  CHECK(coxcount_archimedean_volume(e.ptr, COXCOUNT_D2, -1.0, &vol) == COXCOUNT_ERR_INVALID);
}

TEST_CASE("predicted constant breakdown") {
  Engine e;
  coxcount_breakdown b{};
  REQUIRE(coxcount_predicted_constant(e.ptr, COXCOUNT_D1, 100000, 1e-3, &b) == COXCOUNT_OK);
  CHECK(b.alpha.num == 1);
  CHECK(b.alpha.den == 6);
  CHECK(b.tau_infinity_regions == 40.0);
  CHECK(b.prediction_low <= b.prediction);
  CHECK(b.prediction <= b.prediction_high);
  CHECK(std::fabs(b.prediction - 40.0 / (M_PI * M_PI)) <= 1e-2);
}

TEST_CASE("convergence rows and fit through the C API") {
  std::vector<int64_t> bounds = {100, 1000, 10000};
  std::vector<int64_t> counts;
  for (int64_t b : bounds) {
    double bd = static_cast<double>(b);
    counts.push_back(static_cast<int64_t>(std::llround(4.0 * bd * std::log(bd) + 1.0 * bd)));
  }
  std::vector<coxcount_convergence_row> rows(bounds.size());
  REQUIRE(coxcount_convergence_table(bounds.data(), counts.data(), bounds.size(), 4.0,
                                     rows.data()) == COXCOUNT_OK);
  CHECK(rows[0].bound == 100);
  CHECK(rows[2].bound == 10000);
  CHECK(rows[2].ratio > 0.0);

  double c1 = 0.0, c2 = 0.0;
  REQUIRE(coxcount_fit_two_term(bounds.data(), counts.data(), bounds.size(), &c1, &c2) ==
          COXCOUNT_OK);
  CHECK(std::fabs(c1 - 4.0) <= 0.01);
  CHECK(std::fabs(c2 - 1.0) <= 0.05);

  CHECK(coxcount_fit_two_term(bounds.data(), counts.data(), 2, &c1, &c2) ==
        COXCOUNT_ERR_INVALID);
  CHECK(coxcount_fit_two_term(nullptr, counts.data(), 3, &c1, &c2) == COXCOUNT_ERR_INVALID);
}

TEST_CASE("verification checks over the C API") {
  Engine e;
  CHECK(coxcount_check_grading() == COXCOUNT_OK);
  CHECK(coxcount_check_densities(50) == COXCOUNT_OK);
  CHECK(coxcount_check_oracle(e.ptr, COXCOUNT_D1, 25) == COXCOUNT_OK);
  CHECK(coxcount_check_oracle(e.ptr, COXCOUNT_D2, 25) == COXCOUNT_OK);
  CHECK(coxcount_check_volumes(e.ptr, 1e-2) == COXCOUNT_OK);
  CHECK(coxcount_check_oracle(nullptr, COXCOUNT_D1, 10) == COXCOUNT_ERR_INVALID);
}

TEST_CASE("status strings") {
  CHECK(std::strcmp(coxcount_status_string(COXCOUNT_OK), "ok") == 0);
  for (int s = 0; s <= 5; ++s)
    CHECK(coxcount_status_string(static_cast<coxcount_status>(s)) != nullptr);
}
