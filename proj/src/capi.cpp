#include "coxcount.h"

#include <new>
#include <stdexcept>
#include <vector>

#include "coxcount/analysis.hpp"
#include "coxcount/constants.hpp"
#include "coxcount/enumeration.hpp"
#include "coxcount/verification.hpp"

struct coxcount_engine {
  coxcount::CountOptions count_opts;
};

namespace {

using coxcount::DivisorTag;

DivisorTag to_divisor(int d) {
  if (d == COXCOUNT_D1) return DivisorTag::D1;
  if (d == COXCOUNT_D2) return DivisorTag::D2;
  throw std::invalid_argument("divisor must be COXCOUNT_D1 or COXCOUNT_D2");
}

coxcount_rational to_c_rational(const coxcount::Rational& r) {
  coxcount::int128 num = r.num(), den = r.den();
  if (num > INT64_MAX || num < INT64_MIN || den > INT64_MAX)
    throw std::overflow_error("rational does not fit 64 bits");
  return coxcount_rational{static_cast<int64_t>(num), static_cast<int64_t>(den)};
}

template <typename Fn>
coxcount_status guarded(Fn&& fn) {
  try {
    fn();
    return COXCOUNT_OK;
  } catch (const std::invalid_argument&) {
    return COXCOUNT_ERR_INVALID;
  } catch (const std::overflow_error&) {
    return COXCOUNT_ERR_OVERFLOW;
  } catch (const std::runtime_error&) {
    return COXCOUNT_ERR_NO_CONVERGENCE;
  } catch (...) {
    return COXCOUNT_ERR_INTERNAL;
  }
}

coxcount_status from_check(const coxcount::CheckOutcome& outcome) {
  return outcome.passed ? COXCOUNT_OK : COXCOUNT_ERR_CHECK_FAILED;
}

}  // namespace

extern "C" {

coxcount_engine* coxcount_engine_new(void) {
  return new (std::nothrow) coxcount_engine{};
}

void coxcount_engine_free(coxcount_engine* engine) { delete engine; }

coxcount_status coxcount_engine_set_shards(coxcount_engine* engine, int shards) {
  if (engine == nullptr || shards < 1 || shards > 1024) return COXCOUNT_ERR_INVALID;
  engine->count_opts.shards = shards;
  return COXCOUNT_OK;
}

coxcount_status coxcount_count(coxcount_engine* engine, int divisor, int64_t bound,
                               int method, coxcount_count_result* out) {
  if (engine == nullptr || out == nullptr) return COXCOUNT_ERR_INVALID;
  return guarded([&] {
    coxcount::CountResult r;
    if (method == COXCOUNT_METHOD_ORACLE)
      r = coxcount::oracle_count(to_divisor(divisor), bound);
    else if (method == COXCOUNT_METHOD_FAST)
      r = coxcount::count_points(to_divisor(divisor), bound, engine->count_opts);
    else
      throw std::invalid_argument("unknown method");
    out->divisor = divisor;
    out->bound = r.bound;
    out->count = r.count;
    out->method = method;
    out->elapsed_seconds = r.elapsed_seconds;
  });
}

coxcount_status coxcount_fp_point_count(int divisor, int64_t prime, int64_t* out) {
  if (out == nullptr) return COXCOUNT_ERR_INVALID;
  return guarded([&] { *out = coxcount::fp_count(to_divisor(divisor), prime); });
}

coxcount_status coxcount_local_density(int divisor, int64_t prime, coxcount_rational* out) {
  if (out == nullptr) return COXCOUNT_ERR_INVALID;
  return guarded([&] {
    coxcount::LocalDensity ld = coxcount::local_density(to_divisor(divisor), prime);
    *out = to_c_rational(ld.value);
  });
}

coxcount_status coxcount_alpha(coxcount_rational* out) {
  if (out == nullptr) return COXCOUNT_ERR_INVALID;
  return guarded([&] { *out = to_c_rational(coxcount::alpha(coxcount::effective_cone_spec())); });
}

coxcount_status coxcount_euler_product(int divisor, int64_t prime_bound, double* partial,
                                       double* tail_bound) {
  if (partial == nullptr || tail_bound == nullptr) return COXCOUNT_ERR_INVALID;
  return guarded([&] {
    coxcount::EulerProduct ep = coxcount::euler_product(to_divisor(divisor), prime_bound);
    *partial = ep.partial;
    *tail_bound = ep.tail_bound;
  });
}

coxcount_status coxcount_archimedean_volume(coxcount_engine* engine, int divisor, double tol,
                                            double* value) {
  if (engine == nullptr || value == nullptr) return COXCOUNT_ERR_INVALID;
  return guarded(
      [&] { *value = coxcount::archimedean_volume_quadrature(to_divisor(divisor), tol); });
}

coxcount_status coxcount_archimedean_regions(int divisor, coxcount_rational pieces[3],
                                             coxcount_rational* total) {
  if (pieces == nullptr || total == nullptr) return COXCOUNT_ERR_INVALID;
  return guarded([&] {
    coxcount::RegionVolume rv = coxcount::archimedean_volume_regions(to_divisor(divisor));
    for (int i = 0; i < 3; ++i) pieces[i] = to_c_rational(rv.pieces[static_cast<std::size_t>(i)]);
    *total = to_c_rational(rv.total);
  });
}

coxcount_status coxcount_predicted_constant(coxcount_engine* engine, int divisor,
                                            int64_t prime_bound, double tol,
                                            coxcount_breakdown* out) {
  if (engine == nullptr || out == nullptr) return COXCOUNT_ERR_INVALID;
  return guarded([&] {
    coxcount::ConstantBreakdown b =
        coxcount::predicted_constant(to_divisor(divisor), prime_bound, tol);
    out->divisor = divisor;
    out->alpha = to_c_rational(b.alpha);
    out->tau_infinity_quadrature = b.tau_infinity_quadrature;
    out->tau_infinity_regions = b.tau_infinity_regions;
    out->euler_partial = b.euler_partial;
    out->euler_tail_bound = b.euler_tail_bound;
    out->prediction = b.prediction;
    out->prediction_low = b.prediction_low;
    out->prediction_high = b.prediction_high;
  });
}

coxcount_status coxcount_convergence_table(const int64_t* bounds, const int64_t* counts,
                                           size_t n, double prediction,
                                           coxcount_convergence_row* rows_out) {
  if ((n > 0 && (bounds == nullptr || counts == nullptr)) || rows_out == nullptr)
    return COXCOUNT_ERR_INVALID;
  return guarded([&] {
    std::vector<coxcount::CountResult> results(n);
    for (size_t i = 0; i < n; ++i) {
      results[i].divisor = DivisorTag::D1;  // table math is divisor-agnostic
      results[i].bound = bounds[i];
      results[i].count = counts[i];
    }
    std::vector<coxcount::ConvergenceRow> rows =
        coxcount::convergence_table(results, prediction);
    for (size_t i = 0; i < rows.size(); ++i) {
      rows_out[i].bound = rows[i].bound;
      rows_out[i].count = rows[i].count;
      rows_out[i].ratio = rows[i].ratio;
      rows_out[i].prediction = rows[i].prediction;
      rows_out[i].relative_gap = rows[i].relative_gap;
      rows_out[i].residual_per_b = rows[i].residual_per_b;
    }
  });
}

coxcount_status coxcount_fit_two_term(const int64_t* bounds, const int64_t* counts, size_t n,
                                      double* c1, double* c2) {
  if (bounds == nullptr || counts == nullptr || c1 == nullptr || c2 == nullptr)
    return COXCOUNT_ERR_INVALID;
  return guarded([&] {
    std::vector<int64_t> b(bounds, bounds + n), c(counts, counts + n);
    auto [f1, f2] = coxcount::fit_two_term(b, c);
    *c1 = f1;
    *c2 = f2;
  });
}

coxcount_status coxcount_check_grading(void) {
  coxcount_status rc = COXCOUNT_ERR_INTERNAL;
  coxcount_status g = guarded([&] { rc = from_check(coxcount::check_grading()); });
  return g == COXCOUNT_OK ? rc : g;
}

coxcount_status coxcount_check_densities(int64_t max_prime) {
  coxcount_status rc = COXCOUNT_ERR_INTERNAL;
  coxcount_status g = guarded([&] { rc = from_check(coxcount::check_densities(max_prime)); });
  return g == COXCOUNT_OK ? rc : g;
}

coxcount_status coxcount_check_oracle(coxcount_engine* engine, int divisor, int64_t max_bound) {
  if (engine == nullptr) return COXCOUNT_ERR_INVALID;
  coxcount_status rc = COXCOUNT_ERR_INTERNAL;
  coxcount_status g = guarded(
      [&] { rc = from_check(coxcount::check_oracle_equivalence(to_divisor(divisor), max_bound)); });
  return g == COXCOUNT_OK ? rc : g;
}

coxcount_status coxcount_check_volumes(coxcount_engine* engine, double tol) {
  if (engine == nullptr) return COXCOUNT_ERR_INVALID;
  coxcount_status rc = COXCOUNT_ERR_INTERNAL;
  coxcount_status g = guarded([&] { rc = from_check(coxcount::check_volume_agreement(tol)); });
  return g == COXCOUNT_OK ? rc : g;
}

const char* coxcount_status_string(coxcount_status status) {
  switch (status) {
    case COXCOUNT_OK: return "ok";
    case COXCOUNT_ERR_INVALID: return "invalid argument";
    case COXCOUNT_ERR_OVERFLOW: return "exact-arithmetic overflow guard";
    case COXCOUNT_ERR_NO_CONVERGENCE: return "quadrature did not converge";
    case COXCOUNT_ERR_CHECK_FAILED: return "verification check failed";
    case COXCOUNT_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

}  // extern "C"
