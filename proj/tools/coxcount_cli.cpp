// coxcount command line: exact point counts, predicted-constant factors,
// verification suite and convergence reports, with CSV or JSON output.
//
// Exit codes: 0 success, 1 check/convergence failure, 2 usage error.

#include <charconv>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "coxcount.h"
#include "json.hpp"

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

std::string fmt_double(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string fmt_rational(coxcount_rational r) {
  if (r.den == 1) return std::to_string(r.num);
  return std::to_string(r.num) + "/" + std::to_string(r.den);
}

std::string join_bounds(const std::vector<std::int64_t>& bounds) {
  std::string s;
  for (std::size_t i = 0; i < bounds.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(bounds[i]);
  }
  return s;
}

struct EngineHandle {
  coxcount_engine* ptr = coxcount_engine_new();
  ~EngineHandle() { coxcount_engine_free(ptr); }
};

struct Output {
  std::ofstream file;
  std::ostream* stream = &std::cout;

  bool open(const std::string& path) {
    if (path.empty()) return true;
    file.open(path, std::ios::binary);  // binary keeps LF endings everywhere
    if (!file) return false;
    stream = &file;
    return true;
  }
  std::ostream& out() { return *stream; }
};

int usage_error(const std::string& msg) {
  std::cerr << "error: " << msg << "\n";
  return kExitUsage;
}

int status_exit(coxcount_status st, const std::string& what) {
  std::cerr << "error: " << what << ": " << coxcount_status_string(st) << "\n";
  return (st == COXCOUNT_ERR_CHECK_FAILED || st == COXCOUNT_ERR_NO_CONVERGENCE)
             ? kExitCheckFailed
             : kExitUsage;
}

struct CommonConfig {
  std::string divisor = "D1";
  std::vector<std::int64_t> bounds;
  std::string method = "fast";
  std::int64_t prime_bound = 1000000;
  double tol = 1e-4;
  int shards = 1;
  std::string format = "csv";
  std::string out_path;
};

int divisor_code(const std::string& name) {
  if (name == "D1") return COXCOUNT_D1;
  if (name == "D2") return COXCOUNT_D2;
  return 0;
}

int validate_common(const CommonConfig& cfg, bool need_bounds) {
  if (divisor_code(cfg.divisor) == 0) return usage_error("divisor must be D1 or D2");
  if (cfg.format != "csv" && cfg.format != "json")
    return usage_error("format must be csv or json");
  if (cfg.method != "fast" && cfg.method != "oracle")
    return usage_error("method must be fast or oracle");
  if (cfg.shards < 1) return usage_error("shards must be >= 1");
  if (!(cfg.tol > 0.0)) return usage_error("tol must be positive");
  if (cfg.prime_bound < 2) return usage_error("prime bound must be >= 2");
  if (need_bounds) {
    if (cfg.bounds.empty()) return usage_error("at least one bound is required");
    for (std::size_t i = 0; i < cfg.bounds.size(); ++i) {
      if (cfg.bounds[i] < 1) return usage_error("bounds must be >= 1");
      if (i > 0 && cfg.bounds[i] <= cfg.bounds[i - 1])
        return usage_error("bounds must be strictly increasing");
    }
  }
  return kExitOk;
}

struct MetaFields {
  bool bounds = false;
  bool method = false;
  bool constants = false;  // prime bound and quadrature tolerance
  bool shards = false;
};

void write_meta_csv(std::ostream& os, const std::string& command, const CommonConfig& cfg,
                    const MetaFields& fields) {
  os << "# coxcount " << command << "\n";
  os << "# divisor: " << cfg.divisor << "\n";
  if (fields.bounds) os << "# bounds: " << join_bounds(cfg.bounds) << "\n";
  if (fields.method) os << "# method: " << cfg.method << "\n";
  if (fields.constants) {
    os << "# prime-bound: " << cfg.prime_bound << "\n";
    os << "# tol: " << fmt_double(cfg.tol) << "\n";
  }
  if (fields.shards) os << "# shards: " << cfg.shards << "\n";
  os << "# conventions: natural logarithm in B log B; heights exact integers; "
        "CSV uses '.' decimals and LF endings\n";
}

ordered_json meta_json(const std::string& command, const CommonConfig& cfg,
                       const MetaFields& fields) {
  ordered_json meta;
  meta["command"] = command;
  meta["divisor"] = cfg.divisor;
  if (fields.bounds) meta["bounds"] = cfg.bounds;
  if (fields.method) meta["method"] = cfg.method;
  if (fields.constants) {
    meta["prime_bound"] = cfg.prime_bound;
    meta["tol"] = cfg.tol;
  }
  if (fields.shards) meta["shards"] = cfg.shards;
  meta["log_convention"] = "natural";
  return meta;
}

int run_counts(coxcount_engine* engine, const CommonConfig& cfg,
               std::vector<coxcount_count_result>& results) {
  int method = cfg.method == "oracle" ? COXCOUNT_METHOD_ORACLE : COXCOUNT_METHOD_FAST;
  for (std::int64_t b : cfg.bounds) {
    coxcount_count_result r;
    coxcount_status st = coxcount_count(engine, divisor_code(cfg.divisor), b, method, &r);
    if (st != COXCOUNT_OK) return status_exit(st, "count at B = " + std::to_string(b));
    results.push_back(r);
  }
  return kExitOk;
}

int cmd_count(const CommonConfig& cfg) {
  if (int rc = validate_common(cfg, true); rc != kExitOk) return rc;
  EngineHandle engine;
  coxcount_engine_set_shards(engine.ptr, cfg.shards);

  std::vector<coxcount_count_result> results;
  if (int rc = run_counts(engine.ptr, cfg, results); rc != kExitOk) return rc;

  Output out;
  if (!out.open(cfg.out_path)) return usage_error("cannot open output path " + cfg.out_path);
  if (cfg.format == "csv") {
    write_meta_csv(out.out(), "count", cfg, MetaFields{true, true, false, true});
    out.out() << "divisor,B,count,method,elapsed_seconds\n";
    for (const auto& r : results)
      out.out() << cfg.divisor << "," << r.bound << "," << r.count << "," << cfg.method << ","
                << fmt_double(r.elapsed_seconds) << "\n";
  } else {
    ordered_json doc;
    doc["meta"] = meta_json("count", cfg, MetaFields{true, true, false, true});
    doc["rows"] = ordered_json::array();
    for (const auto& r : results) {
      ordered_json row;
      row["divisor"] = cfg.divisor;
      row["B"] = r.bound;
      row["count"] = r.count;
      row["method"] = cfg.method;
      row["elapsed_seconds"] = r.elapsed_seconds;
      doc["rows"].push_back(row);
    }
    out.out() << doc.dump(2) << "\n";
  }
  return kExitOk;
}

int cmd_constants(const CommonConfig& cfg) {
  if (int rc = validate_common(cfg, false); rc != kExitOk) return rc;
  EngineHandle engine;

  coxcount_breakdown b;
  coxcount_status st = coxcount_predicted_constant(engine.ptr, divisor_code(cfg.divisor),
                                                   cfg.prime_bound, cfg.tol, &b);
  if (st != COXCOUNT_OK) return status_exit(st, "predicted constant");

  Output out;
  if (!out.open(cfg.out_path)) return usage_error("cannot open output path " + cfg.out_path);
  if (cfg.format == "csv") {
    write_meta_csv(out.out(), "constants", cfg, MetaFields{false, false, true, false});
    out.out() << "divisor,alpha,tau_infinity_quadrature,tau_infinity_regions,euler_partial,"
                 "euler_tail_bound,prediction_low,prediction_high\n";
    out.out() << cfg.divisor << "," << fmt_rational(b.alpha) << ","
              << fmt_double(b.tau_infinity_quadrature) << ","
              << fmt_double(b.tau_infinity_regions) << "," << fmt_double(b.euler_partial)
              << "," << fmt_double(b.euler_tail_bound) << "," << fmt_double(b.prediction_low)
              << "," << fmt_double(b.prediction_high) << "\n";
  } else {
    ordered_json doc;
    doc["meta"] = meta_json("constants", cfg, MetaFields{false, false, true, false});
    ordered_json row;
    row["divisor"] = cfg.divisor;
    row["alpha"] = fmt_rational(b.alpha);
    row["tau_infinity_quadrature"] = b.tau_infinity_quadrature;
    row["tau_infinity_regions"] = b.tau_infinity_regions;
    row["euler_partial"] = b.euler_partial;
    row["euler_tail_bound"] = b.euler_tail_bound;
    row["prediction_low"] = b.prediction_low;
    row["prediction_high"] = b.prediction_high;
    doc["breakdown"] = row;
    out.out() << doc.dump(2) << "\n";
  }
  return kExitOk;
}

struct VerifyConfig {
  std::int64_t max_prime = 100;
  std::int64_t max_bound = 200;
  double tol = 1e-3;
  std::string format = "csv";
  std::string out_path;
};

int cmd_verify(const VerifyConfig& cfg) {
  if (cfg.format != "csv" && cfg.format != "json")
    return usage_error("format must be csv or json");
  if (cfg.max_prime < 2) return usage_error("max-prime must be >= 2");
  if (cfg.max_bound < 1 || cfg.max_bound > 500)
    return usage_error("max-bound must be in [1, 500]");
  if (!(cfg.tol > 0.0)) return usage_error("tol must be positive");

  EngineHandle engine;
  struct Check {
    std::string name;
    coxcount_status status;
  };
  std::vector<Check> checks;
  checks.push_back({"grading", coxcount_check_grading()});
  checks.push_back({"densities(p<=" + std::to_string(cfg.max_prime) + ")",
                    coxcount_check_densities(cfg.max_prime)});
  checks.push_back({"oracle-D1(B<=" + std::to_string(cfg.max_bound) + ")",
                    coxcount_check_oracle(engine.ptr, COXCOUNT_D1, cfg.max_bound)});
  checks.push_back({"oracle-D2(B<=" + std::to_string(cfg.max_bound) + ")",
                    coxcount_check_oracle(engine.ptr, COXCOUNT_D2, cfg.max_bound)});
  checks.push_back({"volumes(tol=" + fmt_double(cfg.tol) + ")",
                    coxcount_check_volumes(engine.ptr, cfg.tol)});

  bool all_passed = true;
  for (const Check& c : checks)
    if (c.status != COXCOUNT_OK) all_passed = false;

  Output out;
  if (!out.open(cfg.out_path)) return usage_error("cannot open output path " + cfg.out_path);
  if (cfg.format == "csv") {
    out.out() << "# coxcount verify\n";
    out.out() << "check,result\n";
    for (const Check& c : checks)
      out.out() << c.name << "," << (c.status == COXCOUNT_OK ? "PASS" : "FAIL") << "\n";
    out.out() << "# all checks " << (all_passed ? "passed" : "FAILED") << "\n";
  } else {
    ordered_json doc;
    doc["meta"]["command"] = "verify";
    doc["meta"]["max_prime"] = cfg.max_prime;
    doc["meta"]["max_bound"] = cfg.max_bound;
    doc["meta"]["tol"] = cfg.tol;
    doc["checks"] = ordered_json::array();
    for (const Check& c : checks) {
      ordered_json row;
      row["name"] = c.name;
      row["passed"] = (c.status == COXCOUNT_OK);
      doc["checks"].push_back(row);
    }
    doc["all_passed"] = all_passed;
    out.out() << doc.dump(2) << "\n";
  }
  return all_passed ? kExitOk : kExitCheckFailed;
}

int cmd_report(const CommonConfig& cfg_in) {
  CommonConfig cfg = cfg_in;
  if (cfg.bounds.empty()) cfg.bounds = {1000, 3000, 10000, 30000, 100000};
  if (int rc = validate_common(cfg, true); rc != kExitOk) return rc;

  EngineHandle engine;
  coxcount_engine_set_shards(engine.ptr, cfg.shards);

  std::vector<coxcount_count_result> results;
  if (int rc = run_counts(engine.ptr, cfg, results); rc != kExitOk) return rc;

  coxcount_breakdown b;
  coxcount_status st = coxcount_predicted_constant(engine.ptr, divisor_code(cfg.divisor),
                                                   cfg.prime_bound, cfg.tol, &b);
  if (st != COXCOUNT_OK) return status_exit(st, "predicted constant");

  std::vector<std::int64_t> bounds, counts;
  for (const auto& r : results) {
    bounds.push_back(r.bound);
    counts.push_back(r.count);
  }
  std::vector<coxcount_convergence_row> rows(results.size());
  st = coxcount_convergence_table(bounds.data(), counts.data(), bounds.size(), b.prediction,
                                  rows.data());
  if (st != COXCOUNT_OK) return status_exit(st, "convergence table");

  double c1 = 0.0, c2 = 0.0;
  bool have_fit = bounds.size() >= 3;
  if (have_fit) {
    st = coxcount_fit_two_term(bounds.data(), counts.data(), bounds.size(), &c1, &c2);
    if (st != COXCOUNT_OK) return status_exit(st, "two-term fit");
  }
  double fit_gap = have_fit ? std::abs(c1 - b.prediction) / b.prediction : 0.0;

  Output out;
  if (!out.open(cfg.out_path)) return usage_error("cannot open output path " + cfg.out_path);
  if (cfg.format == "csv") {
    write_meta_csv(out.out(), "report", cfg, MetaFields{true, true, true, true});
    out.out() << "# alpha: " << fmt_rational(b.alpha) << "\n";
    out.out() << "# tau_infinity_quadrature: " << fmt_double(b.tau_infinity_quadrature) << "\n";
    out.out() << "# tau_infinity_regions: " << fmt_double(b.tau_infinity_regions) << "\n";
    out.out() << "# euler_partial: " << fmt_double(b.euler_partial) << "\n";
    out.out() << "# euler_tail_bound: " << fmt_double(b.euler_tail_bound) << "\n";
    out.out() << "# prediction: " << fmt_double(b.prediction) << "\n";
    out.out() << "# prediction_interval: [" << fmt_double(b.prediction_low) << ","
              << fmt_double(b.prediction_high) << "]\n";
    out.out() << "B,count,ratio,prediction,relative_gap,residual_per_B\n";
    for (const auto& r : rows)
      out.out() << r.bound << "," << r.count << "," << fmt_double(r.ratio) << ","
                << fmt_double(r.prediction) << "," << fmt_double(r.relative_gap) << ","
                << fmt_double(r.residual_per_b) << "\n";
    if (have_fit) {
      out.out() << "# fit_c1: " << fmt_double(c1) << "\n";
      out.out() << "# fit_c2: " << fmt_double(c2) << "\n";
      out.out() << "# fit_relative_gap: " << fmt_double(fit_gap) << "\n";
    }
  } else {
    ordered_json doc;
    doc["meta"] = meta_json("report", cfg, MetaFields{true, true, true, true});
    ordered_json bd;
    bd["alpha"] = fmt_rational(b.alpha);
    bd["tau_infinity_quadrature"] = b.tau_infinity_quadrature;
    bd["tau_infinity_regions"] = b.tau_infinity_regions;
    bd["euler_partial"] = b.euler_partial;
    bd["euler_tail_bound"] = b.euler_tail_bound;
    bd["prediction"] = b.prediction;
    bd["prediction_low"] = b.prediction_low;
    bd["prediction_high"] = b.prediction_high;
    doc["breakdown"] = bd;
    doc["rows"] = ordered_json::array();
    for (const auto& r : rows) {
      ordered_json row;
      row["B"] = r.bound;
      row["count"] = r.count;
      row["ratio"] = r.ratio;
      row["prediction"] = r.prediction;
      row["relative_gap"] = r.relative_gap;
      row["residual_per_B"] = r.residual_per_b;
      doc["rows"].push_back(row);
    }
    if (have_fit) {
      doc["fit"]["c1"] = c1;
      doc["fit"]["c2"] = c2;
      doc["fit"]["relative_gap"] = fit_gap;
    }
    out.out() << doc.dump(2) << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact integral-point counts and predicted constants for the conic blow-up of P^3"};
  app.require_subcommand(1);

  CommonConfig count_cfg, constants_cfg, report_cfg;
  VerifyConfig verify_cfg;

  CLI::App* count = app.add_subcommand("count", "exact point counts N_i(B)");
  count->add_option("--divisor", count_cfg.divisor, "divisor tag (D1|D2)")->required();
  count->add_option("--bounds", count_cfg.bounds, "height bounds, comma separated")
      ->required()
      ->delimiter(',');
  count->add_option("--method", count_cfg.method, "fast|oracle (oracle needs B <= 500)");
  count->add_option("--shards", count_cfg.shards, "thread shards for the outer loop");
  count->add_option("--format", count_cfg.format, "csv|json");
  count->add_option("--out", count_cfg.out_path, "output path (default stdout)");

  CLI::App* constants = app.add_subcommand("constants", "predicted leading-constant factors");
  constants->add_option("--divisor", constants_cfg.divisor, "divisor tag (D1|D2)")->required();
  constants->add_option("--prime-bound", constants_cfg.prime_bound, "Euler product cutoff");
  constants->add_option("--tol", constants_cfg.tol, "quadrature tolerance");
  constants->add_option("--format", constants_cfg.format, "csv|json");
  constants->add_option("--out", constants_cfg.out_path, "output path (default stdout)");

  CLI::App* verify = app.add_subcommand("verify", "run the verification suite");
  verify->add_option("--max-prime", verify_cfg.max_prime, "density checks up to this prime");
  verify->add_option("--max-bound", verify_cfg.max_bound, "oracle equivalence up to this bound");
  verify->add_option("--tol", verify_cfg.tol, "volume agreement tolerance");
  verify->add_option("--format", verify_cfg.format, "csv|json");
  verify->add_option("--out", verify_cfg.out_path, "output path (default stdout)");

  CLI::App* report = app.add_subcommand("report", "counts, prediction, convergence and fit");
  report->add_option("--divisor", report_cfg.divisor, "divisor tag (D1|D2)")->required();
  report->add_option("--bounds", report_cfg.bounds,
                     "height bounds (default 1000,3000,10000,30000,100000)")
      ->delimiter(',');
  report->add_option("--method", report_cfg.method, "fast|oracle");
  report->add_option("--prime-bound", report_cfg.prime_bound, "Euler product cutoff");
  report->add_option("--tol", report_cfg.tol, "quadrature tolerance");
  report->add_option("--shards", report_cfg.shards, "thread shards");
  report->add_option("--format", report_cfg.format, "csv|json");
  report->add_option("--out", report_cfg.out_path, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (count->parsed()) return cmd_count(count_cfg);
    if (constants->parsed()) return cmd_constants(constants_cfg);
    if (verify->parsed()) return cmd_verify(verify_cfg);
    if (report->parsed()) return cmd_report(report_cfg);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCheckFailed;
  }
  return usage_error("no subcommand given");
}
