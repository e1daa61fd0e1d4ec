#pragma once

// Real-valued special functions on (0, inf). No reflection formula: every
// function rejects x <= 0 and non-finite input with DomainError.

namespace gammaratio {

/// Strictly positive, finite real. Construction validates.
class PositiveReal {
 public:
  PositiveReal(double value);  // NOLINT(google-explicit-constructor)
  double value() const noexcept { return value_; }
  operator double() const noexcept { return value_; }  // NOLINT

 private:
  double value_;
};

/// ln Gamma(x). Relative error <= 1e-12 on [1e-3, 1e6] away from the zeros
/// at x = 1 and x = 2, where the absolute error is a few ulp.
double log_gamma(PositiveReal x);

/// psi(x) = d/dx ln Gamma(x).
double digamma(PositiveReal x);

/// ln B(a, b).
double log_beta(PositiveReal a, PositiveReal b);

/// Residual of the Legendre duplication formula in log form,
///   ln G(a) + ln G(a + 1/2) - [(1 - 2a) ln 2 + ln(pi)/2 + ln G(2a)],
/// which is identically zero.
double duplication_residual(PositiveReal alpha);

}  // namespace gammaratio
