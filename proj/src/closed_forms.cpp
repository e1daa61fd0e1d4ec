#include "gammaratio/closed_forms.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "gammaratio/errors.hpp"
#include "gammaratio/summation.hpp"

namespace gammaratio {

namespace {

void require_n(IndexKind kind, std::size_t n) {
  if (n < min_sample_size(kind)) {
    throw SizeError(std::string(to_string(kind)) + " expectation needs n >= " +
                    std::to_string(min_sample_size(kind)) + ", got " + std::to_string(n));
  }
}

ExpectationResult make_result(IndexKind kind, std::size_t n, double expectation,
                              double population) {
  return {kind, n, expectation, population, expectation - population};
}

// n [ln G(a + 1/n) - ln G(a)]
double log_gamma_power_ratio(double alpha, std::size_t n) {
  const double nd = static_cast<double>(n);
  return nd * (log_gamma(alpha + 1.0 / nd) - log_gamma(alpha));
}

}  // namespace

double pop_gini(const GammaParams& p) {
  const double a = p.alpha;
  return std::exp(log_gamma(a + 0.5) - log_gamma(a + 1.0) - 0.5 * std::log(std::numbers::pi));
}

double pop_theil(const GammaParams& p) {
  const double a = p.alpha;
  return digamma(a) + 1.0 / a - std::log(a);
}

double pop_atkinson(const GammaParams& p) {
  const double a = p.alpha;
  return -std::expm1(digamma(a) - std::log(a));
}

double pop_vmr(const GammaParams& p) { return 1.0 / p.lambda; }

double population_index(IndexKind kind, const GammaParams& p) {
  switch (kind) {
    case IndexKind::Gini:
      return pop_gini(p);
    case IndexKind::TheilT:
      return pop_theil(p);
    case IndexKind::Atkinson:
      return pop_atkinson(p);
    case IndexKind::Vmr:
      return pop_vmr(p);
  }
  throw DomainError("unknown index kind");
}

ExpectationResult expect_gini(const GammaParams& p, std::size_t n) {
  require_n(IndexKind::Gini, n);
  const double g = pop_gini(p);
  return make_result(IndexKind::Gini, n, g, g);
}

ExpectationResult expect_theil(const GammaParams& p, std::size_t n) {
  require_n(IndexKind::TheilT, n);
  const double pop = pop_theil(p);
  if (n == 1) return make_result(IndexKind::TheilT, n, 0.0, pop);
  const double a = p.alpha;
  const double na = static_cast<double>(n) * a;
  const double e = digamma(a) + 1.0 / a + std::log(static_cast<double>(n)) - digamma(na) - 1.0 / na;
  return make_result(IndexKind::TheilT, n, e, pop);
}

ExpectationResult expect_atkinson(const GammaParams& p, std::size_t n) {
  require_n(IndexKind::Atkinson, n);
  const double pop = pop_atkinson(p);
  if (n == 1) return make_result(IndexKind::Atkinson, n, 0.0, pop);
  const double a = p.alpha;
  const double e = -std::expm1(log_gamma_power_ratio(a, n) - std::log(a));
  return make_result(IndexKind::Atkinson, n, e, pop);
}

ExpectationResult expect_vmr(const GammaParams& p, std::size_t n) {
  require_n(IndexKind::Vmr, n);
  const double na = static_cast<double>(n) * p.alpha;
  const double e = na / ((na + 1.0) * p.lambda);
  return make_result(IndexKind::Vmr, n, e, pop_vmr(p));
}

ExpectationResult expect_index(IndexKind kind, const GammaParams& p, std::size_t n) {
  switch (kind) {
    case IndexKind::Gini:
      return expect_gini(p, n);
    case IndexKind::TheilT:
      return expect_theil(p, n);
    case IndexKind::Atkinson:
      return expect_atkinson(p, n);
    case IndexKind::Vmr:
      return expect_vmr(p, n);
  }
  throw DomainError("unknown index kind");
}

double theil_bias(PositiveReal alpha, std::size_t n) {
  if (n < 1) throw SizeError("theil bias needs n >= 1");
  const double na = static_cast<double>(n) * alpha;
  return std::log(na) - digamma(na) - 1.0 / na;
}

double dirichlet_root_product_moment(PositiveReal alpha, std::size_t n) {
  if (n < 2) throw SizeError("Dirichlet product moment needs n >= 2, got " + std::to_string(n));
  const double a = alpha;
  return std::exp(log_gamma_power_ratio(a, n) - std::log(static_cast<double>(n) * a));
}

double debias(IndexKind kind, const GammaParams& p, std::size_t n, double raw) {
  require_n(kind, n);
  const double a = p.alpha;
  switch (kind) {
    case IndexKind::Gini:
      return raw;
    case IndexKind::TheilT:
      return raw - theil_bias(p.alpha, n);
    case IndexKind::Atkinson:
      return 1.0 - (1.0 - raw) * std::exp(digamma(a) - log_gamma_power_ratio(a, n));
    case IndexKind::Vmr: {
      const double na = static_cast<double>(n) * a;
      return raw * (na + 1.0) / na;
    }
  }
  throw DomainError("unknown index kind");
}

double method_of_moments_alpha(const Sample& s) {
  if (s.size() < 2) throw SizeError("method-of-moments alpha needs n >= 2");
  const double mu = s.mean();
  CompensatedSum ss;
  for (double y : s.values()) ss += (y - mu) * (y - mu);
  const double var = ss.value() / static_cast<double>(s.size() - 1);
  if (!(var > 0.0)) throw DomainError("method-of-moments alpha undefined for a constant sample");
  return mu * mu / var;
}

}  // namespace gammaratio
