#include <cmath>
#include <numbers>

#include "doctest.h"
#include "gammaratio/errors.hpp"
#include "gammaratio/verify.hpp"

using namespace gammaratio;
using doctest::Approx;

namespace {

McOptions opts(std::uint64_t offset = 0, unsigned workers = 1) {
  McOptions o;
  o.seed = 42;
  o.stream_offset = offset;
  o.workers = workers;
  return o;
}

void check_report_invariants(const McReport& r, double z_max = kDefaultZMax) {
  REQUIRE(r.mc_stderr > 0.0);
  CHECK(r.z_score == Approx((r.mc_mean - r.target) / r.mc_stderr).epsilon(1e-12));
  CHECK(r.pass == (std::fabs(r.z_score) <= z_max));
}

}  // namespace

TEST_CASE("mc_expectation reproduces the exact expectations") {
  const auto g = mc_expectation(IndexKind::Gini, {2.0, 1.0}, 5, 200'000, opts(1));
  CHECK(g.target == Approx(0.375).epsilon(1e-14));
  CHECK(g.mc_mean == Approx(0.375).epsilon(0.01));
  CHECK(g.pass);
  check_report_invariants(g);

  const auto v = mc_expectation(IndexKind::Vmr, {1.0, 1.0}, 2, 200'000, opts(2));
  CHECK(v.target == Approx(2.0 / 3.0).epsilon(1e-14));
  CHECK(v.pass);
  check_report_invariants(v);

  const auto t = mc_expectation(IndexKind::TheilT, {1.0, 3.0}, 2, 200'000, opts(3));
  CHECK(t.target == Approx(0.19314718055994530942).epsilon(1e-13));
  CHECK(t.pass);
  CHECK(t.kind == "theil_t");
  CHECK(t.lambda == 3.0);
}

TEST_CASE("debiased estimators are mean-unbiased") {
  for (IndexKind k : {IndexKind::TheilT, IndexKind::Atkinson, IndexKind::Vmr}) {
    const auto r = mc_expectation(k, {0.5, 2.0}, 5, 100'000, opts(10), Estimator::Debiased);
    CHECK(r.target == Approx(population_index(k, {0.5, 2.0})).epsilon(1e-14));
    CHECK_MESSAGE(r.pass, r.kind << " z=" << r.z_score);
  }
}

TEST_CASE("preconditions") {
  CHECK_THROWS_AS(mc_expectation(IndexKind::Gini, {1.0, 1.0}, 5, 9'999, opts()), DomainError);
  CHECK_THROWS_AS(mc_expectation(IndexKind::Vmr, {1.0, 1.0}, 1, 10'000, opts()), SizeError);
  CHECK_THROWS_AS(dirichlet_product_moment_check(1.0, 1, 10'000, opts()), SizeError);
  CHECK_THROWS_AS(lukacs_independence_check({1.0, 1.0}, 2, 100, opts()), DomainError);
}

TEST_CASE("reports do not depend on the worker count") {
  const auto one = mc_expectation(IndexKind::Atkinson, {0.5, 1.0}, 20, 50'000, opts(5, 1));
  const auto many = mc_expectation(IndexKind::Atkinson, {0.5, 1.0}, 20, 50'000, opts(5, 7));
  CHECK(one.mc_mean == many.mc_mean);
  CHECK(one.mc_stderr == many.mc_stderr);

  const auto l1 = lukacs_independence_check({3.7, 1.0}, 5, 20'000, opts(6, 1));
  const auto l4 = lukacs_independence_check({3.7, 1.0}, 5, 20'000, opts(6, 4));
  CHECK(l1.r_vs_sum.mc_mean == l4.r_vs_sum.mc_mean);
  CHECK(l1.abs_vs_sum.mc_mean == l4.abs_vs_sum.mc_mean);
}

TEST_CASE("z_max controls pass") {
  auto o = opts(1);
  o.z_max = 1e-6;
  const auto r = mc_expectation(IndexKind::Gini, {2.0, 1.0}, 5, 20'000, o);
  CHECK_FALSE(r.pass);
  check_report_invariants(r, 1e-6);
}

TEST_CASE("Lukacs: proportion and sum are uncorrelated under the gamma law") {
  for (auto [a, n] : {std::pair{1.0, std::size_t{2}}, std::pair{3.7, std::size_t{5}},
                      std::pair{0.5, std::size_t{2}}}) {
    const auto r = lukacs_independence_check({a, 1.0}, n, 100'000, opts(20));
    CHECK(r.pass());
    CHECK(r.r_vs_sum.mc_stderr == Approx(1.0 / std::sqrt(100'000.0)));
    CHECK(std::fabs(r.r_vs_sum.mc_mean) * std::sqrt(100'000.0) <= 4.0);
  }
}

TEST_CASE("beta E{U log U} closed form against quadrature") {
  auto r = beta_ulogu_check(1.0, 1.0);
  CHECK(r.closed_form == Approx(-0.25).epsilon(1e-14));
  CHECK(r.numeric == Approx(-0.25).epsilon(1e-10));
  r = beta_ulogu_check(2.0, 2.0);
  CHECK(r.closed_form == Approx(-0.29166666666666666667).epsilon(1e-13));
  CHECK(std::fabs(r.closed_form - r.numeric) <= 1e-8);
  r = beta_ulogu_check(0.5, 4.5);
  CHECK(r.closed_form == Approx(-0.16696276944532240449).epsilon(1e-12));
  CHECK(std::fabs(r.closed_form - r.numeric) <= 1e-8);
}

TEST_CASE("E|2R - 1| closed form against quadrature") {
  for (auto [a, expected] : {std::pair{1.0, 0.5}, std::pair{2.0, 0.375},
                             std::pair{0.5, 2.0 / std::numbers::pi}}) {
    const auto r = abs_2r_minus_1_check(a);
    CHECK(r.closed_form == Approx(expected).epsilon(1e-14));
    CHECK(std::fabs(r.closed_form - r.numeric) <= 1e-8);
  }
}

TEST_CASE("Dirichlet product moment by Monte Carlo") {
  const auto r = dirichlet_product_moment_check(1.0, 2, 200'000, opts(30));
  CHECK(r.target == Approx(std::numbers::pi / 8.0).epsilon(1e-14));
  CHECK(r.pass);
}

TEST_CASE("two-point remark: G_2 is unbiased for the two-point law") {
  auto r = two_point_remark_check(1.0, 3.0);
  CHECK(r.expected_gini == 0.25);
  CHECK(r.population == 0.25);
  r = two_point_remark_check(2.0, 8.0);
  CHECK(r.expected_gini == r.population);
  CHECK(r.population == Approx(0.3).epsilon(1e-15));
  CHECK_THROWS_AS(two_point_remark_check(1.0, 1.0), DomainError);
  CHECK_THROWS_AS(two_point_remark_check(3.0, 1.0), DomainError);
}

TEST_CASE("suite on a reduced grid") {
  SuiteOptions so;
  so.grid.alphas = {1.0};
  so.grid.lambdas = {1.0};
  so.grid.ns = {2};
  so.reps = 20'000;
  so.lukacs_reps = 20'000;
  so.dirichlet_reps = 20'000;
  so.mc.workers = 1;
  const auto report = run_verify_suite(so);
  CHECK(report.index_cells.size() == 7);  // 4 raw + 3 debiased
  CHECK(report.lukacs.size() == 12);
  CHECK(report.dirichlet.size() == 2);
  CHECK(report.identities.size() == 16 + 4 + 2);
  CHECK_MESSAGE(report.pass, (report.failures.empty() ? "" : report.failures.front()));

  so.mc.z_max = 0.5;
  const auto tight = run_verify_suite(so);
  CHECK_FALSE(tight.pass);
  CHECK_FALSE(tight.failures.empty());
}

TEST_CASE("cell stream offsets separate cells and leave room for blocks") {
  const auto a = cell_stream_offset("gini", 1.0, 1.0, 2);
  const auto b = cell_stream_offset("gini", 1.0, 1.0, 5);
  const auto c = cell_stream_offset("gini_debiased", 1.0, 1.0, 2);
  CHECK(a != b);
  CHECK(a != c);
  CHECK((a & 0xFFFFFFFFULL) == 0);
  CHECK(a == cell_stream_offset("gini", 1.0, 1.0, 2));
}

TEST_CASE("property: scale-free estimators do not move with the rate") {
  // Same streams, so the lambda = 3 draws are the lambda = 1 draws over 3.
  for (IndexKind k : {IndexKind::Gini, IndexKind::TheilT, IndexKind::Atkinson}) {
    const auto r1 = mc_expectation(k, {2.0, 1.0}, 5, 20'000, opts(40));
    const auto r3 = mc_expectation(k, {2.0, 3.0}, 5, 20'000, opts(40));
    CHECK(std::fabs(r1.mc_mean - r3.mc_mean) < 4.0 * r1.mc_stderr);
    CHECK(r1.mc_mean == Approx(r3.mc_mean).epsilon(1e-12));
  }
}
