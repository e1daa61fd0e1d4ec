#include <boost/math/quadrature/tanh_sinh.hpp>
#include <cmath>
#include <numbers>

#include "doctest.h"
#include "gammaratio/errors.hpp"
#include "gammaratio/quadrature.hpp"

using namespace gammaratio;
using doctest::Approx;

TEST_CASE("15-point rule integrates polynomials of degree <= 22 in one panel") {
  for (int deg = 0; deg <= 22; ++deg) {
    const auto r = integrate([deg](double x) { return std::pow(x, deg); }, -1.0, 1.0,
                             {1.0, 1.0, 1});
    const double exact = deg % 2 == 0 ? 2.0 / (deg + 1) : 0.0;
    CHECK_MESSAGE(std::fabs(r.value - exact) <= 1e-14, "degree " << deg);
  }
}

TEST_CASE("smooth integrands") {
  CHECK(integrate([](double x) { return std::sin(x); }, 0.0, std::numbers::pi).value ==
        Approx(2.0).epsilon(1e-13));
  CHECK(integrate([](double x) { return std::exp(-x * x); }, -5.0, 5.0).value ==
        Approx(std::sqrt(std::numbers::pi)).epsilon(1e-10));
}

TEST_CASE("integrable endpoint singularities") {
  // int_0^1 x^-1/2 dx = 2, int_0^1 ln x dx = -1
  CHECK(integrate([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0).value ==
        Approx(2.0).epsilon(1e-10));
  CHECK(integrate([](double x) { return std::log(x); }, 0.0, 1.0).value ==
        Approx(-1.0).epsilon(1e-10));
  // Arcsine density on (0, 1) integrates to 1; singular at both ends.
  const auto r = integrate_unit([](double u, double v) {
    return 1.0 / (std::numbers::pi * std::sqrt(u * v));
  });
  CHECK(r.value == Approx(1.0).epsilon(1e-10));
}

TEST_CASE("agrees with Boost tanh-sinh on a beta-type integrand") {
  const double a = 0.5, b = 4.5;
  auto f = [&](double u, double v) { return u * std::log(u) * std::pow(u, a - 1) * std::pow(v, b - 1); };
  const double ours = integrate_unit(f).value;
  boost::math::quadrature::tanh_sinh<double> ts;
  const double theirs = ts.integrate([&](double u) { return f(u, 1.0 - u); }, 0.0, 1.0);
  CHECK(ours == Approx(theirs).epsilon(1e-10));
}

TEST_CASE("non-convergence and non-finite values raise NumericError") {
  CHECK_THROWS_AS(integrate([](double x) { return 1.0 / x; }, 0.0, 1.0, {1e-10, 1e-10, 50}),
                  NumericError);
  CHECK_THROWS_AS(integrate([](double) { return NAN; }, 0.0, 1.0), NumericError);
}
