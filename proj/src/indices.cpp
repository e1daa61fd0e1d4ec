#include "gammaratio/indices.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "gammaratio/errors.hpp"
#include "gammaratio/summation.hpp"

namespace gammaratio {

namespace {

void require_size(const Sample& s, std::size_t n_min, const char* what) {
  if (s.size() < n_min) {
    throw SizeError(std::string(what) + " needs n >= " + std::to_string(n_min) + ", got " +
                    std::to_string(s.size()));
  }
}

// mean_i log(Y_i / mu_n); zero for n = 1 since mu_1 == Y_1.
double mean_log_ratio(const Sample& s, double mu) {
  CompensatedSum acc;
  for (double y : s.values()) acc += std::log(y / mu);
  return acc.value() / static_cast<double>(s.size());
}

}  // namespace

double gini_pairwise(const Sample& s) {
  require_size(s, 2, "gini");
  const auto y = s.values();
  CompensatedSum numer;
  for (std::size_t i = 0; i < y.size(); ++i) {
    for (std::size_t j = i + 1; j < y.size(); ++j) numer += std::fabs(y[i] - y[j]);
  }
  const double n = static_cast<double>(y.size());
  return numer.value() / ((n - 1.0) * s.sum());
}

double gini_sorted(const Sample& s) {
  require_size(s, 2, "gini");
  std::vector<double> sorted(s.values().begin(), s.values().end());
  std::sort(sorted.begin(), sorted.end());
  const auto n = static_cast<double>(sorted.size());
  CompensatedSum numer;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const double weight = 2.0 * static_cast<double>(i + 1) - n - 1.0;
    numer += weight * sorted[i];
  }
  return std::max(0.0, numer.value()) / ((n - 1.0) * s.sum());
}

double theil_t(const Sample& s) {
  const double mu = s.mean();
  CompensatedSum numer;
  for (double y : s.values()) numer += y * std::log(y / mu);
  // Non-negative by Jensen; clamp rounding noise on near-constant samples.
  return std::max(0.0, numer.value() / s.sum());
}

double atkinson(const Sample& s) {
  const double mu = s.mean();
  // 1 - exp(mean log(Y/mu)); expm1 keeps precision when A_n is tiny.
  return std::max(0.0, -std::expm1(mean_log_ratio(s, mu)));
}

double vmr(const Sample& s) {
  require_size(s, 2, "vmr");
  const double mu = s.mean();
  CompensatedSum ss;
  for (double y : s.values()) {
    const double d = y - mu;
    ss += d * d;
  }
  const double n = static_cast<double>(s.size());
  return ss.value() / (n - 1.0) / mu;
}

double compute_index(IndexKind kind, const Sample& s) {
  switch (kind) {
    case IndexKind::Gini:
      return gini(s);
    case IndexKind::TheilT:
      return theil_t(s);
    case IndexKind::Atkinson:
      return atkinson(s);
    case IndexKind::Vmr:
      return vmr(s);
  }
  throw DomainError("unknown index kind");
}

}  // namespace gammaratio
