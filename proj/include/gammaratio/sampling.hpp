#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "gammaratio/closed_forms.hpp"
#include "gammaratio/rng.hpp"

namespace gammaratio {

/// Upper bound on rejection-loop iterations per variate.
inline constexpr int kMaxRejectionIterations = 10'000;

/// Gamma(alpha, rate lambda) variate by Marsaglia-Tsang; alpha < 1 uses the
/// Gamma(alpha + 1) * U^(1/alpha) boost. Throws NumericError if the
/// rejection loop exhausts its budget or the result underflows to zero.
double gamma_variate(RngStream& rng, const GammaParams& p);

/// Beta(a, b) as X / (X + Y) with X ~ Gamma(a, 1), Y ~ Gamma(b, 1).
double beta_variate(RngStream& rng, PositiveReal a, PositiveReal b);

/// Symmetric Dirichlet(alpha, ..., alpha) of length n >= 2 by normalizing
/// i.i.d. Gamma(alpha, 1) draws.
std::vector<double> dirichlet_variate(RngStream& rng, PositiveReal alpha, std::size_t n);

/// Fills `out` with i.i.d. gamma variates.
void fill_gamma(RngStream& rng, const GammaParams& p, std::span<double> out);

}  // namespace gammaratio
