#include "gammaratio/sampling.hpp"

#include <cmath>
#include <string>

#include "gammaratio/errors.hpp"
#include "gammaratio/summation.hpp"

namespace gammaratio {

namespace {

// Marsaglia & Tsang (2000), shape >= 1, unit rate.
double standard_gamma_ge1(RngStream& rng, double shape) {
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (int it = 0; it < kMaxRejectionIterations; ++it) {
    double x, v;
    do {
      x = rng.normal();
      v = 1.0 + c * x;
    } while (v <= 0.0);
    v = v * v * v;
    const double u = rng.uniform();
    const double x2 = x * x;
    if (u < 1.0 - 0.0331 * x2 * x2) return d * v;
    if (std::log(u) < 0.5 * x2 + d * (1.0 - v + std::log(v))) return d * v;
  }
  throw NumericError("gamma sampler exceeded " + std::to_string(kMaxRejectionIterations) +
                     " rejection iterations (shape " + std::to_string(shape) + ")");
}

double standard_gamma(RngStream& rng, double shape) {
  if (shape >= 1.0) return standard_gamma_ge1(rng, shape);
  const double g = standard_gamma_ge1(rng, shape + 1.0);
  const double y = g * std::exp(std::log(rng.uniform()) / shape);
  if (!(y > 0.0)) {
    throw NumericError("gamma variate underflowed to zero (shape " + std::to_string(shape) + ")");
  }
  return y;
}

}  // namespace

double gamma_variate(RngStream& rng, const GammaParams& p) {
  return standard_gamma(rng, p.alpha) / p.lambda;
}

double beta_variate(RngStream& rng, PositiveReal a, PositiveReal b) {
  const double x = standard_gamma(rng, a);
  const double y = standard_gamma(rng, b);
  return x / (x + y);
}

std::vector<double> dirichlet_variate(RngStream& rng, PositiveReal alpha, std::size_t n) {
  if (n < 2) throw SizeError("Dirichlet variate needs n >= 2, got " + std::to_string(n));
  std::vector<double> z(n);
  CompensatedSum total;
  for (double& v : z) {
    v = standard_gamma(rng, alpha);
    total += v;
  }
  const double s = total.value();
  for (double& v : z) v /= s;
  return z;
}

void fill_gamma(RngStream& rng, const GammaParams& p, std::span<double> out) {
  for (double& v : out) v = gamma_variate(rng, p);
}

}  // namespace gammaratio
