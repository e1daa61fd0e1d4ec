#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "gammaratio/closed_forms.hpp"

namespace gammaratio {

inline constexpr std::size_t kMinReps = 10'000;
inline constexpr double kDefaultZMax = 4.0;
inline constexpr std::uint64_t kDefaultSeed = 20250101;

/// Monte Carlo summary. z_score = (mc_mean - target) / mc_stderr and
/// pass <=> |z_score| <= z_max.
struct McReport {
  std::string kind;  ///< index name, "<index>_debiased", or identity name
  double alpha = 0.0;
  double lambda = 0.0;
  std::size_t n = 0;
  std::size_t reps = 0;
  double mc_mean = 0.0;
  double mc_stderr = 0.0;
  double target = 0.0;
  double z_score = 0.0;
  bool pass = false;
};

/// Replicates are split into fixed-size blocks; block b draws from
/// RngStream(seed, stream_offset + b) and blocks are reduced in index
/// order, so the report does not depend on `workers`.
struct McOptions {
  std::uint64_t seed = kDefaultSeed;
  std::uint64_t stream_offset = 0;
  unsigned workers = 0;  ///< 0 = hardware concurrency
  std::size_t block_size = 4096;
  double z_max = kDefaultZMax;
};

enum class Estimator { Raw, Debiased };

/// Averages the estimator over `reps` gamma samples of size n and compares
/// with expect_index (Raw) or population_index (Debiased). Throws
/// DomainError for reps < kMinReps and SizeError for n too small.
McReport mc_expectation(IndexKind kind, const GammaParams& p, std::size_t n, std::size_t reps,
                        const McOptions& opts, Estimator estimator = Estimator::Raw);

/// Stream offset that identifies one (kind, estimator, alpha, lambda, n)
/// cell, so a cell reproduces the same draws whatever grid it runs in.
std::uint64_t cell_stream_offset(std::string_view label, double alpha, double lambda,
                                 std::size_t n);

/// Pearson correlations of (R, S) and (|2R - 1|, S) where S = sum Y_i and
/// R = Y_1 / S. Each report carries corr as mc_mean, 1/sqrt(reps) as
/// mc_stderr and target 0.
struct LukacsReport {
  McReport r_vs_sum;
  McReport abs_vs_sum;
  bool pass() const noexcept { return r_vs_sum.pass && abs_vs_sum.pass; }
};
LukacsReport lukacs_independence_check(const GammaParams& p, std::size_t n, std::size_t reps,
                                       const McOptions& opts);

/// MC mean of prod Z_i^(1/n), Z ~ Dirichlet(alpha), against the closed form.
McReport dirichlet_product_moment_check(PositiveReal alpha, std::size_t n, std::size_t reps,
                                        const McOptions& opts);

/// (closed form, numeric) pairs.
struct IdentityPair {
  double closed_form;
  double numeric;
};

/// E{U log U} for U ~ Beta(a, b): a/(a+b) [psi(a+1) - psi(a+b+1)] against
/// adaptive quadrature.
IdentityPair beta_ulogu_check(PositiveReal a, PositiveReal b);

/// E|2R - 1| for R ~ Beta(alpha, alpha): pop_gini(alpha) against quadrature.
IdentityPair abs_2r_minus_1_check(PositiveReal alpha);

struct TwoPointResult {
  double expected_gini;  ///< E(G_2)
  double population;     ///< G(Y)
};

/// Two-point law P(Y = a) = P(Y = b) = 1/2 with 0 < a < b: E(G_2) and G(Y),
/// both by enumerating the four equally likely ordered pairs.
TwoPointResult two_point_remark_check(PositiveReal a, PositiveReal b);

// ---------------------------------------------------------------------------
// Full verification suite

struct VerifyGrid {
  std::vector<double> alphas{0.5, 1.0, 2.0, 5.0};
  std::vector<double> lambdas{1.0, 3.0};
  std::vector<std::size_t> ns{2, 5, 20};
};

struct IdentityReport {
  std::string name;
  std::vector<std::pair<std::string, double>> params;
  double closed_form = 0.0;
  double numeric = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct SuiteOptions {
  VerifyGrid grid;
  std::size_t reps = 200'000;
  std::size_t lukacs_reps = 100'000;
  std::size_t dirichlet_reps = 1'000'000;
  McOptions mc;
};

struct SuiteReport {
  std::vector<McReport> index_cells;     ///< raw and debiased estimator cells
  std::vector<McReport> lukacs;          ///< two reports per (alpha, n)
  std::vector<McReport> dirichlet;
  std::vector<IdentityReport> identities;
  std::vector<std::string> failures;     ///< human-readable reasons
  bool pass = false;
};

/// Runs every check. The index cells of each family (one kind, raw or
/// debiased) may have floor(cells / 24) cells outside z_max; every other
/// check, and the VMR downward-bias sign, must hold in every case.
SuiteReport run_verify_suite(const SuiteOptions& opts);

}  // namespace gammaratio
