#pragma once

#include <functional>

namespace gammaratio {

struct QuadratureResult {
  double value;
  double error_estimate;
  int intervals;
};

struct QuadratureOptions {
  double abs_tol = 1e-10;
  double rel_tol = 1e-10;
  int max_intervals = 4000;
};

/// Globally adaptive 15-point Gauss-Kronrod quadrature on [a, b]: the
/// interval with the largest error estimate is bisected until the summed
/// estimate meets max(abs_tol, rel_tol |I|). Nodes never touch a or b, so
/// integrable endpoint singularities are fine. Throws NumericError when the
/// interval budget runs out or the integrand returns a non-finite value.
QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           const QuadratureOptions& opts = {});

/// Integral over (0, 1) of f(u, 1 - u). The range is split at 1/2 and each
/// half is integrated in the distance to its own endpoint, so both
/// arguments reach f with full relative precision near 0 and near 1.
QuadratureResult integrate_unit(const std::function<double(double, double)>& f,
                                const QuadratureOptions& opts = {});

}  // namespace gammaratio
