#pragma once

#include <cstddef>

#include "gammaratio/sample.hpp"
#include "gammaratio/special_functions.hpp"

namespace gammaratio {

/// Gamma law with density lambda^alpha / Gamma(alpha) y^(alpha-1) e^(-lambda y).
struct GammaParams {
  PositiveReal alpha;   ///< shape
  PositiveReal lambda;  ///< rate

  double mean() const noexcept { return alpha / lambda; }
  double variance() const noexcept { return alpha / (lambda * lambda); }
};

/// Exact finite-sample mean of an estimator next to its population target.
struct ExpectationResult {
  IndexKind kind;
  std::size_t n;
  double expectation;
  double population;
  double bias;  ///< expectation - population, as evaluated
};

// Population indices of the gamma law. Only pop_vmr depends on lambda.
double pop_gini(const GammaParams& p);
double pop_theil(const GammaParams& p);
double pop_atkinson(const GammaParams& p);
double pop_vmr(const GammaParams& p);
double population_index(IndexKind kind, const GammaParams& p);

// Exact E(estimator) for n i.i.d. gamma observations. Each throws SizeError
// when n is below min_sample_size(kind).
ExpectationResult expect_gini(const GammaParams& p, std::size_t n);
ExpectationResult expect_theil(const GammaParams& p, std::size_t n);
ExpectationResult expect_atkinson(const GammaParams& p, std::size_t n);
ExpectationResult expect_vmr(const GammaParams& p, std::size_t n);
ExpectationResult expect_index(IndexKind kind, const GammaParams& p, std::size_t n);

/// Closed-form Theil bias ln(n a) - psi(n a) - 1/(n a).
double theil_bias(PositiveReal alpha, std::size_t n);

/// E prod_i Z_i^(1/n) for Z ~ Dirichlet(alpha, ..., alpha) of length n:
/// Gamma^n(alpha + 1/n) / (n alpha Gamma^n(alpha)).
double dirichlet_root_product_moment(PositiveReal alpha, std::size_t n);

/// Maps a raw estimate to one whose expectation under gamma(p) equals the
/// population index:
///   Gini      raw (already unbiased)
///   TheilT    raw - theil_bias(alpha, n)
///   Atkinson  1 - (1 - raw) e^psi(alpha) Gamma^n(alpha) / Gamma^n(alpha + 1/n)
///   VMR       raw (n alpha + 1) / (n alpha)
double debias(IndexKind kind, const GammaParams& p, std::size_t n, double raw);

/// Method-of-moments shape estimate mu_n^2 / s_n^2 (unbiased variance).
/// Throws SizeError for n < 2 and DomainError for a constant sample.
double method_of_moments_alpha(const Sample& s);

}  // namespace gammaratio
