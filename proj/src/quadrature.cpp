#include "coxcount/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <queue>
#include <stdexcept>
#include <vector>

namespace coxcount {

namespace {

// 3-point Gauss-Legendre on [0,1].
constexpr double kNode3 = 0.3872983346207417;  // sqrt(3/5)/2
const double kNodes3[3] = {0.5 - kNode3, 0.5, 0.5 + kNode3};
const double kWeights3[3] = {5.0 / 18.0, 8.0 / 18.0, 5.0 / 18.0};

// 2-point Gauss-Legendre on [0,1]; deliberately a different node family so
// the error estimate cannot alias against the 3-point rule on kinked
// integrands.
constexpr double kNode2 = 0.2886751345948129;  // 1/(2 sqrt(3))
const double kNodes2[2] = {0.5 - kNode2, 0.5 + kNode2};

using Func = std::function<double(double, double)>;

double gauss3_cell(const Func& f, double x0, double y0, double h) {
  double s = 0.0;
  for (int i = 0; i < 3; ++i) {
    double x = x0 + kNodes3[i] * h;
    double wi = kWeights3[i];
    for (int j = 0; j < 3; ++j) {
      double y = y0 + kNodes3[j] * h;
      s += wi * kWeights3[j] * f(x, y);
    }
  }
  return s * h * h;
}

double gauss2_cell(const Func& f, double x0, double y0, double h) {
  double s = 0.0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) s += f(x0 + kNodes2[i] * h, y0 + kNodes2[j] * h);
  return 0.25 * s * h * h;
}

struct Cell {
  double x0, y0, h;
  double fine;  // 2x2 composite Gauss value
  double est;   // |fine - coarse|
  std::int64_t seq;
};

Cell make_cell(const Func& f, double x0, double y0, double h, std::int64_t seq) {
  double hh = 0.5 * h;
  double fine = gauss3_cell(f, x0, y0, hh) + gauss3_cell(f, x0 + hh, y0, hh) +
                gauss3_cell(f, x0, y0 + hh, hh) + gauss3_cell(f, x0 + hh, y0 + hh, hh);
  // estimate against both the low-order rule and the one-level parent rule;
  // taking the max keeps the estimate honest on kinked integrands
  double low = gauss2_cell(f, x0, y0, h);
  double mid = gauss3_cell(f, x0, y0, h);
  double est = std::max(std::fabs(fine - low), std::fabs(fine - mid));
  Cell c{x0, y0, h, fine, est, seq};
  if (!std::isfinite(c.fine) || !std::isfinite(c.est))
    throw std::runtime_error("quadrature: non-finite integrand value");
  return c;
}

struct WorstFirst {
  bool operator()(const Cell& a, const Cell& b) const {
    if (a.est != b.est) return a.est < b.est;
    return a.seq > b.seq;
  }
};

}  // namespace

QuadratureOutcome integrate_unit_square(const Func& f, const QuadratureOptions& opts) {
  if (!(opts.target_abs_error > 0.0))
    throw std::invalid_argument("quadrature: target error must be positive");

  std::priority_queue<Cell, std::vector<Cell>, WorstFirst> heap;
  std::int64_t seq = 0;
  long double est_sum = 0.0L;

  // start from a 2x2 grid so the first estimates already see some structure
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      Cell c = make_cell(f, 0.5 * i, 0.5 * j, 0.5, seq++);
      est_sum += c.est;
      heap.push(c);
    }

  long cells = 4;
  while (est_sum > opts.target_abs_error && cells < opts.max_cells) {
    Cell worst = heap.top();
    if (worst.est <= 0.0) break;  // nothing left to gain
    heap.pop();
    est_sum -= worst.est;
    double hh = 0.5 * worst.h;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        Cell c = make_cell(f, worst.x0 + i * hh, worst.y0 + j * hh, hh, seq++);
        est_sum += c.est;
        heap.push(c);
      }
    cells += 3;
  }

  std::vector<Cell> leaves;
  leaves.reserve(heap.size());
  while (!heap.empty()) {
    leaves.push_back(heap.top());
    heap.pop();
  }
  std::sort(leaves.begin(), leaves.end(),
            [](const Cell& a, const Cell& b) { return a.seq < b.seq; });

  // Kahan summation in creation order keeps the result reproducible.
  double sum = 0.0, comp = 0.0, err = 0.0;
  for (const Cell& c : leaves) {
    double v = c.fine - comp;
    double t = sum + v;
    comp = (t - sum) - v;
    sum = t;
    err += c.est;
  }

  QuadratureOutcome out;
  out.value = sum;
  out.error_estimate = err;
  out.cells = cells;
  out.converged = err <= opts.target_abs_error;
  return out;
}

}  // namespace coxcount
