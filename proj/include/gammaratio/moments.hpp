#pragma once

#include <cmath>
#include <cstddef>

namespace gammaratio {

/// Welford accumulator with Chan's pairwise merge. Merging per-block
/// accumulators in a fixed block order makes the result independent of how
/// blocks were scheduled across threads.
struct RunningMoments {
  std::size_t count = 0;
  double mean = 0.0;
  double m2 = 0.0;

  void add(double x) noexcept {
    ++count;
    const double delta = x - mean;
    mean += delta / static_cast<double>(count);
    m2 += delta * (x - mean);
  }

  void merge(const RunningMoments& o) noexcept {
    if (o.count == 0) return;
    if (count == 0) {
      *this = o;
      return;
    }
    const double na = static_cast<double>(count);
    const double nb = static_cast<double>(o.count);
    const double n = na + nb;
    const double delta = o.mean - mean;
    mean += delta * nb / n;
    m2 += o.m2 + delta * delta * na * nb / n;
    count += o.count;
  }

  double variance() const noexcept {
    return count > 1 ? m2 / static_cast<double>(count - 1) : 0.0;
  }
  /// Standard error of the mean.
  double stderr_of_mean() const noexcept {
    return count > 1 ? std::sqrt(variance() / static_cast<double>(count)) : 0.0;
  }
};

/// Bivariate co-moment accumulator for Pearson correlation.
struct RunningCovariance {
  std::size_t count = 0;
  double mean_x = 0.0, mean_y = 0.0;
  double m2_x = 0.0, m2_y = 0.0, c_xy = 0.0;

  void add(double x, double y) noexcept {
    ++count;
    const double n = static_cast<double>(count);
    const double dx = x - mean_x;
    mean_x += dx / n;
    const double dy = y - mean_y;
    mean_y += dy / n;
    m2_x += dx * (x - mean_x);
    m2_y += dy * (y - mean_y);
    c_xy += dx * (y - mean_y);
  }

  void merge(const RunningCovariance& o) noexcept {
    if (o.count == 0) return;
    if (count == 0) {
      *this = o;
      return;
    }
    const double na = static_cast<double>(count);
    const double nb = static_cast<double>(o.count);
    const double n = na + nb;
    const double dx = o.mean_x - mean_x;
    const double dy = o.mean_y - mean_y;
    mean_x += dx * nb / n;
    mean_y += dy * nb / n;
    m2_x += o.m2_x + dx * dx * na * nb / n;
    m2_y += o.m2_y + dy * dy * na * nb / n;
    c_xy += o.c_xy + dx * dy * na * nb / n;
    count += o.count;
  }

  double correlation() const noexcept {
    const double denom = std::sqrt(m2_x * m2_y);
    return denom > 0.0 ? c_xy / denom : 0.0;
  }
};

}  // namespace gammaratio
