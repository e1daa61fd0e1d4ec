#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "doctest.h"
#include "gammaratio/errors.hpp"
#include "gammaratio/moments.hpp"
#include "gammaratio/rng.hpp"
#include "gammaratio/sampling.hpp"

using namespace gammaratio;

namespace {

void check_within_4se(const RunningMoments& m, double target) {
  CHECK_MESSAGE(std::fabs(m.mean - target) <= 4.0 * m.stderr_of_mean(),
                "mean " << m.mean << " target " << target << " se " << m.stderr_of_mean());
}

}  // namespace

TEST_CASE("Philox4x64-10 known-answer vectors") {
  // Random123 kat_vectors: zero counter and key.
  const auto zero = philox4x64_10({0, 0, 0, 0}, {0, 0});
  CHECK(zero == PhiloxCounter{0x16554d9eca36314cULL, 0xdb20fe9d672d0fdcULL,
                              0xd7e772cee186176bULL, 0x7e68b68aec7ba23bULL});
  // numpy.random.Philox(key=[0, 0], counter=[0]*4).random_raw(4); numpy
  // bumps the counter before its first block.
  const auto one = philox4x64_10({1, 0, 0, 0}, {0, 0});
  CHECK(one == PhiloxCounter{0x02f4ba6408e4d89bULL, 0x3dd62b0b9ca8c5b2ULL,
                             0x1c8667a55d902e79ULL, 0x907d7a052fd5b4dcULL});
  const auto keyed = philox4x64_10({1, 0, 0, 0}, {0x0123456789abcdefULL, 0xfedcba9876543210ULL});
  CHECK(keyed[0] == 0x2d2e7c09c193c5faULL);
  CHECK(keyed[1] == 0xd56c6aa2d11f06aaULL);
  CHECK(keyed[2] == 0x184fcdf7f5474a23ULL);
  CHECK(keyed[3] == 0x367832d087008054ULL);
}

TEST_CASE("stream words follow the documented block layout") {
  RngStream s(0, 0);
  for (std::uint64_t block = 0; block < 3; ++block) {
    const auto expect = philox4x64_10({block, 0, 0, 0}, {0, 0});
    for (int w = 0; w < 4; ++w) CHECK(s.next_u64() == expect[w]);
  }
}

TEST_CASE("streams are reproducible and distinct") {
  RngStream a(42, 7), b(42, 7), c(42, 8), d(43, 7);
  int same_c = 0, same_d = 0;
  for (int i = 0; i < 1000; ++i) {
    const auto x = a.next_u64();
    CHECK(x == b.next_u64());
    same_c += x == c.next_u64();
    same_d += x == d.next_u64();
  }
  CHECK(same_c == 0);
  CHECK(same_d == 0);

  RngStream g1(9, 1), g2(9, 1);
  for (int i = 0; i < 200; ++i) CHECK(gamma_variate(g1, {0.7, 2.0}) == gamma_variate(g2, {0.7, 2.0}));
}

TEST_CASE("uniform lies in the open unit interval") {
  RngStream s(1, 2);
  RunningMoments m;
  for (int i = 0; i < 100000; ++i) {
    const double u = s.uniform();
    REQUIRE(u > 0.0);
    REQUIRE(u < 1.0);
    m.add(u);
  }
  check_within_4se(m, 0.5);
}

TEST_CASE("gamma variate moments (alpha=2, lambda=1)") {
  RngStream s(2024, 0);
  const GammaParams p{2.0, 1.0};
  constexpr int kDraws = 1'000'000;
  std::vector<double> y(kDraws);
  RunningMoments m;
  for (double& v : y) {
    v = gamma_variate(s, p);
    REQUIRE(v > 0.0);
    m.add(v);
  }
  check_within_4se(m, 2.0);

  // Sample variance against alpha / lambda^2, SE from the fourth moment.
  RunningMoments sq;
  for (double v : y) sq.add((v - m.mean) * (v - m.mean));
  check_within_4se(sq, 2.0);
}

TEST_CASE("gamma variate rate scaling and small shape") {
  RngStream s(77, 3);
  RunningMoments m_rate, m_small;
  for (int i = 0; i < 400000; ++i) {
    m_rate.add(gamma_variate(s, {3.0, 4.0}));
    m_small.add(gamma_variate(s, {0.3, 1.0}));
  }
  check_within_4se(m_rate, 0.75);
  check_within_4se(m_small, 0.3);
}

TEST_CASE("gamma(alpha=1) passes a Kolmogorov-Smirnov test against Exp(1)") {
  RngStream s(555, 0);
  constexpr int kDraws = 100'000;
  std::vector<double> y(kDraws);
  for (double& v : y) v = gamma_variate(s, {1.0, 1.0});
  std::sort(y.begin(), y.end());
  double d = 0.0;
  for (int i = 0; i < kDraws; ++i) {
    const double cdf = -std::expm1(-y[i]);
    d = std::max({d, (i + 1.0) / kDraws - cdf, cdf - static_cast<double>(i) / kDraws});
  }
  // Asymptotic 0.001-level critical value 1.9495 / sqrt(N).
  CHECK(d < 1.9495 / std::sqrt(static_cast<double>(kDraws)));
}

TEST_CASE("sum of two gammas with a common rate is gamma(a + b)") {
  RngStream s(31, 4);
  RunningMoments sum, sq;
  std::vector<double> draws;
  for (int i = 0; i < 400000; ++i) {
    const double v = gamma_variate(s, {0.7, 2.0}) + gamma_variate(s, {1.8, 2.0});
    draws.push_back(v);
    sum.add(v);
  }
  check_within_4se(sum, 2.5 / 2.0);
  for (double v : draws) sq.add((v - sum.mean) * (v - sum.mean));
  check_within_4se(sq, 2.5 / 4.0);
}

TEST_CASE("tiny shapes that underflow raise NumericError") {
  RngStream s(8, 8);
  bool threw = false;
  for (int i = 0; i < 200 && !threw; ++i) {
    try {
      const double y = gamma_variate(s, {1e-3, 1.0});
      CHECK(y > 0.0);
    } catch (const NumericError&) {
      threw = true;
    }
  }
  CHECK(threw);
}

TEST_CASE("beta variate means") {
  RngStream s(11, 0);
  RunningMoments m26, m11, abs_gini;
  for (int i = 0; i < 1'000'000; ++i) {
    const double u = beta_variate(s, 2.0, 6.0);
    REQUIRE(u > 0.0);
    REQUIRE(u < 1.0);
    m26.add(u);
    const double r = beta_variate(s, 1.0, 1.0);
    m11.add(r);
    abs_gini.add(std::fabs(2.0 * r - 1.0));
  }
  check_within_4se(m26, 0.25);
  check_within_4se(m11, 0.5);
  check_within_4se(abs_gini, 0.5);
}

TEST_CASE("Dirichlet variates") {
  RngStream s(13, 0);
  RunningMoments comp, root_product;
  for (int i = 0; i < 1'000'000; ++i) {
    const auto z3 = dirichlet_variate(s, 1.0, 3);
    double total = 0.0;
    for (double v : z3) {
      REQUIRE(v > 0.0);
      REQUIRE(v < 1.0);
      total += v;
    }
    REQUIRE(std::fabs(total - 1.0) <= 1e-12);
    comp.add(z3[0]);
    const auto z2 = dirichlet_variate(s, 1.0, 2);
    root_product.add(std::sqrt(z2[0] * z2[1]));
  }
  check_within_4se(comp, 1.0 / 3.0);
  check_within_4se(root_product, std::numbers::pi / 8.0);
  CHECK_THROWS_AS(dirichlet_variate(s, 1.0, 1), SizeError);
}

TEST_CASE("property: Dirichlet draws normalize for any shape and length") {
  RngStream s(17, 0);
  for (double a : {0.5, 1.0, 3.0, 50.0})
    for (std::size_t n : {2, 3, 10, 100})
      for (int i = 0; i < 50; ++i) {
        const auto z = dirichlet_variate(s, a, n);
        CHECK(z.size() == n);
        double total = 0.0;
        for (double v : z) total += v;
        CHECK(std::fabs(total - 1.0) <= 1e-12);
      }
}
