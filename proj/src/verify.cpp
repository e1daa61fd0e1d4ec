#include "gammaratio/verify.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <exception>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <thread>

#include "gammaratio/errors.hpp"
#include "gammaratio/indices.hpp"
#include "gammaratio/moments.hpp"
#include "gammaratio/quadrature.hpp"
#include "gammaratio/rng.hpp"
#include "gammaratio/sampling.hpp"

namespace gammaratio {

namespace {

void require_reps(std::size_t reps) {
  if (reps < kMinReps) {
    throw DomainError("reps must be >= " + std::to_string(kMinReps) + ", got " +
                      std::to_string(reps));
  }
}

// Runs `body(stream, count)` for each block and returns the per-block
// accumulators in block order.
template <typename Accum, typename Body>
std::vector<Accum> run_blocks(std::size_t reps, const McOptions& opts, Body body) {
  const std::size_t block = std::max<std::size_t>(1, opts.block_size);
  const std::size_t n_blocks = (reps + block - 1) / block;
  std::vector<Accum> out(n_blocks);
  unsigned workers = opts.workers != 0 ? opts.workers : std::thread::hardware_concurrency();
  workers = std::clamp<unsigned>(workers, 1, static_cast<unsigned>(std::max<std::size_t>(1, n_blocks)));

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  auto work = [&] {
    for (std::size_t b = next++; b < n_blocks && !failed; b = next++) {
      try {
        RngStream rng(opts.seed, opts.stream_offset + b);
        const std::size_t count = std::min(block, reps - b * block);
        out[b] = body(rng, count);
      } catch (...) {
        if (!failed.exchange(true)) failure = std::current_exception();
      }
    }
  };
  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

template <typename Accum>
Accum reduce(const std::vector<Accum>& parts) {
  Accum total;
  for (const auto& p : parts) total.merge(p);
  return total;
}

McReport finish(McReport r, double z_max) {
  if (r.mc_stderr > 0.0) {
    r.z_score = (r.mc_mean - r.target) / r.mc_stderr;
  } else {
    r.z_score = r.mc_mean == r.target ? 0.0 : std::numeric_limits<double>::infinity();
  }
  r.pass = std::fabs(r.z_score) <= z_max;
  return r;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::string debiased_label(IndexKind kind) { return std::string(to_string(kind)) + "_debiased"; }

}  // namespace

std::uint64_t cell_stream_offset(std::string_view label, double alpha, double lambda,
                                 std::size_t n) {
  std::uint64_t h = 0;
  for (char c : label) h = splitmix64(h ^ static_cast<unsigned char>(c));
  h = splitmix64(h ^ std::bit_cast<std::uint64_t>(alpha));
  h = splitmix64(h ^ std::bit_cast<std::uint64_t>(lambda));
  h = splitmix64(h ^ static_cast<std::uint64_t>(n));
  // Low 32 bits are left for the block index.
  return h & ~0xFFFFFFFFULL;
}

McReport mc_expectation(IndexKind kind, const GammaParams& p, std::size_t n, std::size_t reps,
                        const McOptions& opts, Estimator estimator) {
  require_reps(reps);
  const ExpectationResult expected = expect_index(kind, p, n);  // validates n

  auto parts = run_blocks<RunningMoments>(reps, opts, [&](RngStream& rng, std::size_t count) {
    RunningMoments acc;
    std::vector<double> y(n);
    for (std::size_t r = 0; r < count; ++r) {
      fill_gamma(rng, p, y);
      const double raw = compute_index(kind, Sample(y));
      acc.add(estimator == Estimator::Raw ? raw : debias(kind, p, n, raw));
    }
    return acc;
  });
  const RunningMoments total = reduce(parts);

  McReport r;
  r.kind = estimator == Estimator::Raw ? std::string(to_string(kind)) : debiased_label(kind);
  r.alpha = p.alpha;
  r.lambda = p.lambda;
  r.n = n;
  r.reps = reps;
  r.mc_mean = total.mean;
  r.mc_stderr = total.stderr_of_mean();
  r.target = estimator == Estimator::Raw ? expected.expectation : expected.population;
  return finish(std::move(r), opts.z_max);
}

LukacsReport lukacs_independence_check(const GammaParams& p, std::size_t n, std::size_t reps,
                                       const McOptions& opts) {
  require_reps(reps);
  if (n < 2) throw SizeError("Lukacs check needs n >= 2, got " + std::to_string(n));

  struct Pair {
    RunningCovariance r_s, abs_s;
    void merge(const Pair& o) {
      r_s.merge(o.r_s);
      abs_s.merge(o.abs_s);
    }
  };
  auto parts = run_blocks<Pair>(reps, opts, [&](RngStream& rng, std::size_t count) {
    Pair acc;
    std::vector<double> y(n);
    for (std::size_t i = 0; i < count; ++i) {
      fill_gamma(rng, p, y);
      double s = 0.0;
      for (double v : y) s += v;
      const double ratio = y[0] / s;
      acc.r_s.add(ratio, s);
      acc.abs_s.add(std::fabs(2.0 * ratio - 1.0), s);
    }
    return acc;
  });
  const Pair total = reduce(parts);

  auto make = [&](const char* label, double corr) {
    McReport r;
    r.kind = label;
    r.alpha = p.alpha;
    r.lambda = p.lambda;
    r.n = n;
    r.reps = reps;
    r.mc_mean = corr;
    r.mc_stderr = 1.0 / std::sqrt(static_cast<double>(reps));
    r.target = 0.0;
    return finish(std::move(r), opts.z_max);
  };
  return {make("lukacs_corr_r_sum", total.r_s.correlation()),
          make("lukacs_corr_abs2r1_sum", total.abs_s.correlation())};
}

McReport dirichlet_product_moment_check(PositiveReal alpha, std::size_t n, std::size_t reps,
                                        const McOptions& opts) {
  require_reps(reps);
  const double target = dirichlet_root_product_moment(alpha, n);  // validates n

  auto parts = run_blocks<RunningMoments>(reps, opts, [&](RngStream& rng, std::size_t count) {
    RunningMoments acc;
    const double inv_n = 1.0 / static_cast<double>(n);
    for (std::size_t i = 0; i < count; ++i) {
      const auto z = dirichlet_variate(rng, alpha, n);
      double log_sum = 0.0;
      for (double v : z) log_sum += std::log(v);
      acc.add(std::exp(log_sum * inv_n));
    }
    return acc;
  });
  const RunningMoments total = reduce(parts);

  McReport r;
  r.kind = "dirichlet_product_moment";
  r.alpha = alpha;
  r.lambda = 1.0;
  r.n = n;
  r.reps = reps;
  r.mc_mean = total.mean;
  r.mc_stderr = total.stderr_of_mean();
  r.target = target;
  return finish(std::move(r), opts.z_max);
}

IdentityPair beta_ulogu_check(PositiveReal a, PositiveReal b) {
  const double av = a;
  const double bv = b;
  const double closed = av / (av + bv) * (digamma(av + 1.0) - digamma(av + bv + 1.0));
  const double log_b = log_beta(a, b);
  const auto q = integrate_unit([&](double u, double v) {
    const double log_u = u < 0.5 ? std::log(u) : std::log1p(-v);
    const double log_v = v < 0.5 ? std::log(v) : std::log1p(-u);
    return log_u * std::exp(av * log_u + (bv - 1.0) * log_v - log_b);
  });
  return {closed, q.value};
}

IdentityPair abs_2r_minus_1_check(PositiveReal alpha) {
  const double a = alpha;
  const double closed = pop_gini(GammaParams{alpha, 1.0});
  const double log_b = log_beta(alpha, alpha);
  const auto q = integrate_unit([&](double u, double v) {
    const double log_u = u < 0.5 ? std::log(u) : std::log1p(-v);
    const double log_v = v < 0.5 ? std::log(v) : std::log1p(-u);
    return std::fabs(u - v) * std::exp((a - 1.0) * (log_u + log_v) - log_b);
  });
  return {closed, q.value};
}

TwoPointResult two_point_remark_check(PositiveReal a, PositiveReal b) {
  if (!(a.value() < b.value())) throw DomainError("two-point law needs 0 < a < b");
  const double support[2] = {a, b};
  double expected_gini = 0.0;
  double mean_abs_diff = 0.0;
  double mean = 0.0;
  for (double y1 : support) {
    for (double y2 : support) {
      // G_2 = |Y1 - Y2| / (Y1 + Y2) since 1/(n - 1) = 1.
      expected_gini += 0.25 * std::fabs(y1 - y2) / (y1 + y2);
      mean_abs_diff += 0.25 * std::fabs(y1 - y2);
      mean += 0.25 * 0.5 * (y1 + y2);
    }
  }
  return {expected_gini, mean_abs_diff / (2.0 * mean)};
}

SuiteReport run_verify_suite(const SuiteOptions& opts) {
  SuiteReport out;
  auto cell_opts = [&](std::string_view label, double alpha, double lambda, std::size_t n) {
    McOptions o = opts.mc;
    o.stream_offset = opts.mc.stream_offset + cell_stream_offset(label, alpha, lambda, n);
    return o;
  };

  // Index grid, raw and debiased.
  struct Family {
    std::string label;
    std::size_t cells = 0;
    std::size_t failed = 0;
  };
  std::vector<Family> families;
  auto family = [&](const std::string& label) -> Family& {
    for (auto& f : families)
      if (f.label == label) return f;
    families.push_back({label});
    return families.back();
  };

  for (IndexKind kind : kAllIndexKinds) {
    for (Estimator est : {Estimator::Raw, Estimator::Debiased}) {
      if (est == Estimator::Debiased && kind == IndexKind::Gini) continue;
      const std::string label =
          est == Estimator::Raw ? std::string(to_string(kind)) : debiased_label(kind);
      for (double alpha : opts.grid.alphas) {
        for (double lambda : opts.grid.lambdas) {
          for (std::size_t n : opts.grid.ns) {
            const GammaParams p{alpha, lambda};
            McReport r = mc_expectation(kind, p, n, opts.reps, cell_opts(label, alpha, lambda, n), est);
            Family& f = family(label);
            ++f.cells;
            if (!r.pass) ++f.failed;
            if (kind == IndexKind::Vmr && est == Estimator::Raw && !(r.mc_mean < pop_vmr(p))) {
              out.failures.push_back("vmr downward bias violated at alpha=" + std::to_string(alpha) +
                                     " lambda=" + std::to_string(lambda) + " n=" + std::to_string(n));
            }
            out.index_cells.push_back(std::move(r));
          }
        }
      }
    }
  }
  for (const Family& f : families) {
    const std::size_t allowance = f.cells / 24;
    if (f.failed > allowance) {
      out.failures.push_back(f.label + ": " + std::to_string(f.failed) + " of " +
                             std::to_string(f.cells) + " cells outside z_max (allowance " +
                             std::to_string(allowance) + ")");
    }
  }

  for (double alpha : {0.5, 1.0, 3.7}) {
    for (std::size_t n : {std::size_t{2}, std::size_t{5}}) {
      const auto lr = lukacs_independence_check({alpha, 1.0}, n, opts.lukacs_reps,
                                                cell_opts("lukacs", alpha, 1.0, n));
      for (const McReport* r : {&lr.r_vs_sum, &lr.abs_vs_sum}) {
        if (!r->pass) out.failures.push_back(r->kind + " failed at alpha=" + std::to_string(alpha) +
                                             " n=" + std::to_string(n));
        out.lukacs.push_back(*r);
      }
    }
  }

  for (auto [alpha, n] : {std::pair{1.0, std::size_t{2}}, std::pair{2.0, std::size_t{3}}}) {
    McReport r = dirichlet_product_moment_check(alpha, n, opts.dirichlet_reps,
                                                cell_opts("dirichlet", alpha, 1.0, n));
    if (!r.pass) out.failures.push_back("dirichlet product moment failed at alpha=" +
                                        std::to_string(alpha) + " n=" + std::to_string(n));
    out.dirichlet.push_back(std::move(r));
  }

  auto add_identity = [&](IdentityReport rep) {
    rep.pass = std::fabs(rep.closed_form - rep.numeric) <= rep.tolerance;
    if (!rep.pass) out.failures.push_back(rep.name + " disagreement");
    out.identities.push_back(std::move(rep));
  };
  constexpr double kQuadTol = 1e-8;
  for (double a : {0.5, 1.0, 2.0, 4.5}) {
    for (double b : {0.5, 1.0, 2.0, 4.5}) {
      IdentityReport rep{"beta_ulogu", {{"a", a}, {"b", b}}};
      rep.tolerance = kQuadTol;
      try {
        const auto pr = beta_ulogu_check(a, b);
        rep.closed_form = pr.closed_form;
        rep.numeric = pr.numeric;
      } catch (const NumericError&) {
        rep.numeric = std::numeric_limits<double>::quiet_NaN();
      }
      add_identity(std::move(rep));
    }
  }
  for (double alpha : {0.5, 1.0, 2.0, 5.0}) {
    IdentityReport rep{"abs_2r_minus_1", {{"alpha", alpha}}};
    rep.tolerance = kQuadTol;
    try {
      const auto pr = abs_2r_minus_1_check(alpha);
      rep.closed_form = pr.closed_form;
      rep.numeric = pr.numeric;
    } catch (const NumericError&) {
      rep.numeric = std::numeric_limits<double>::quiet_NaN();
    }
    add_identity(std::move(rep));
  }
  for (auto [a, b] : {std::pair{1.0, 3.0}, std::pair{2.0, 8.0}}) {
    IdentityReport rep{"two_point_remark", {{"a", a}, {"b", b}}};
    const auto pr = two_point_remark_check(a, b);
    rep.closed_form = pr.population;
    rep.numeric = pr.expected_gini;
    rep.tolerance = 0.0;
    add_identity(std::move(rep));
  }

  out.pass = out.failures.empty();
  return out;
}

}  // namespace gammaratio
