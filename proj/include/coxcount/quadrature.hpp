#ifndef COXCOUNT_QUADRATURE_HPP
#define COXCOUNT_QUADRATURE_HPP

#include <functional>

namespace coxcount {

struct QuadratureOptions {
  double target_abs_error = 1e-6;
  long max_cells = 400000;  // leaf budget before giving up
};

struct QuadratureOutcome {
  double value = 0.0;
  double error_estimate = 0.0;
  long cells = 0;
  bool converged = false;
};

// Adaptive quadrature of f over [0,1]^2. Per-cell rule: tensor 3-point
// Gauss-Legendre, with the one-level refinement difference as the local
// error estimate. Cells are split worst-first until the estimates sum below
// the target. Evaluation points are always interior, so integrands that are
// only defined on the open square are fine. Deterministic: fixed split order,
// fixed summation order.
QuadratureOutcome integrate_unit_square(const std::function<double(double, double)>& f,
                                        const QuadratureOptions& opts);

}  // namespace coxcount

#endif
