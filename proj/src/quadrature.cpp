#include "gammaratio/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <string>
#include <vector>

#include "gammaratio/errors.hpp"

namespace gammaratio {

namespace {

// Kronrod abscissae (descending, last is the centre) and weights; the Gauss
// 7-point rule uses every other abscissa starting from index 1.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000,
};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714,
};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327,
};

struct Segment {
  double a, b, value, error;
  bool operator<(const Segment& o) const { return error < o.error; }
};

double checked(double y) {
  if (!std::isfinite(y)) throw NumericError("integrand returned a non-finite value");
  return y;
}

Segment gauss_kronrod(const std::function<double(double)>& f, double a, double b) {
  const double centre = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = checked(f(centre));
  double kronrod = fc * kWgk[7];
  double gauss = fc * kWg[3];
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    const double pair = checked(f(centre - dx)) + checked(f(centre + dx));
    kronrod += kWgk[j] * pair;
    if (j % 2 == 1) gauss += kWg[j / 2] * pair;
  }
  kronrod *= half;
  gauss *= half;
  return {a, b, kronrod, std::fabs(kronrod - gauss)};
}

}  // namespace

QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           const QuadratureOptions& opts) {
  std::priority_queue<Segment> queue;
  queue.push(gauss_kronrod(f, a, b));
  double total = queue.top().value;
  double error = queue.top().error;
  int intervals = 1;
  while (error > std::max(opts.abs_tol, opts.rel_tol * std::fabs(total))) {
    if (intervals >= opts.max_intervals) {
      throw NumericError("quadrature did not converge within " +
                         std::to_string(opts.max_intervals) + " intervals (error estimate " +
                         std::to_string(error) + ")");
    }
    const Segment worst = queue.top();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b) ||
        worst.b - worst.a < 4.0 * std::numeric_limits<double>::epsilon() *
                                std::max(std::fabs(worst.a), std::fabs(worst.b))) {
      throw NumericError("quadrature interval collapsed to machine precision");
    }
    queue.pop();
    const Segment left = gauss_kronrod(f, worst.a, mid);
    const Segment right = gauss_kronrod(f, mid, worst.b);
    total += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    queue.push(left);
    queue.push(right);
    ++intervals;
  }
  // Re-sum from the leaves so the running update's cancellation does not leak in.
  double value = 0.0;
  double err = 0.0;
  std::vector<Segment> leaves;
  leaves.reserve(queue.size());
  while (!queue.empty()) {
    leaves.push_back(queue.top());
    queue.pop();
  }
  std::sort(leaves.begin(), leaves.end(), [](const Segment& x, const Segment& y) { return x.a < y.a; });
  for (const Segment& s : leaves) {
    value += s.value;
    err += s.error;
  }
  return {value, err, intervals};
}

QuadratureResult integrate_unit(const std::function<double(double, double)>& f,
                                const QuadratureOptions& opts) {
  QuadratureOptions half_opts = opts;
  half_opts.abs_tol = 0.5 * opts.abs_tol;
  const auto lower = integrate([&](double t) { return f(t, 1.0 - t); }, 0.0, 0.5, half_opts);
  const auto upper = integrate([&](double t) { return f(1.0 - t, t); }, 0.0, 0.5, half_opts);
  return {lower.value + upper.value, lower.error_estimate + upper.error_estimate,
          lower.intervals + upper.intervals};
}

}  // namespace gammaratio
