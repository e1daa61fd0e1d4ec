#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace gammaratio {

enum class IndexKind { Gini, TheilT, Atkinson, Vmr };

inline constexpr IndexKind kAllIndexKinds[] = {IndexKind::Gini, IndexKind::TheilT,
                                               IndexKind::Atkinson, IndexKind::Vmr};

/// Lowercase snake-case name: "gini", "theil_t", "atkinson", "vmr".
std::string_view to_string(IndexKind kind) noexcept;

/// Accepts the canonical names plus "theil" as an alias for Theil T.
std::optional<IndexKind> parse_index_kind(std::string_view name) noexcept;

/// Smallest sample size for which the estimator of `kind` is defined.
std::size_t min_sample_size(IndexKind kind) noexcept;

/// Non-empty list of finite, strictly positive observations.
///
/// Validation happens once at construction (DomainError for a bad value,
/// SizeError for an empty list); the values are immutable afterwards.
class Sample {
 public:
  explicit Sample(std::vector<double> values);

  std::size_t size() const noexcept { return values_.size(); }
  std::span<const double> values() const noexcept { return values_; }
  double operator[](std::size_t i) const noexcept { return values_[i]; }

  /// Compensated sum of the observations.
  double sum() const noexcept;
  /// Arithmetic mean mu_n = sum / n.
  double mean() const noexcept;

  /// Copy scaled by c > 0.
  Sample scaled(double c) const;

 private:
  std::vector<double> values_;
};

inline double sample_mean(const Sample& s) noexcept { return s.mean(); }

}  // namespace gammaratio
