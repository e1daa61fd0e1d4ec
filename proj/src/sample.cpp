#include "gammaratio/sample.hpp"

#include <cmath>
#include <string>

#include "gammaratio/errors.hpp"
#include "gammaratio/summation.hpp"

namespace gammaratio {

std::string_view to_string(IndexKind kind) noexcept {
  switch (kind) {
    case IndexKind::Gini:
      return "gini";
    case IndexKind::TheilT:
      return "theil_t";
    case IndexKind::Atkinson:
      return "atkinson";
    case IndexKind::Vmr:
      return "vmr";
  }
  return "unknown";
}

std::optional<IndexKind> parse_index_kind(std::string_view name) noexcept {
  if (name == "gini") return IndexKind::Gini;
  if (name == "theil_t" || name == "theil") return IndexKind::TheilT;
  if (name == "atkinson") return IndexKind::Atkinson;
  if (name == "vmr") return IndexKind::Vmr;
  return std::nullopt;
}

std::size_t min_sample_size(IndexKind kind) noexcept {
  switch (kind) {
    case IndexKind::Gini:
    case IndexKind::Vmr:
      return 2;
    case IndexKind::TheilT:
    case IndexKind::Atkinson:
      return 1;
  }
  return 1;
}

Sample::Sample(std::vector<double> values) : values_(std::move(values)) {
  if (values_.empty()) throw SizeError("sample must contain at least one observation");
  for (std::size_t i = 0; i < values_.size(); ++i) {
    const double y = values_[i];
    if (!std::isfinite(y) || y <= 0.0) {
      throw DomainError("observation " + std::to_string(i) +
                        " is not finite and strictly positive: " + std::to_string(y));
    }
  }
}

double Sample::sum() const noexcept {
  CompensatedSum acc;
  for (double y : values_) acc += y;
  return acc.value();
}

double Sample::mean() const noexcept { return sum() / static_cast<double>(values_.size()); }

Sample Sample::scaled(double c) const {
  std::vector<double> out(values_);
  for (double& y : out) y *= c;
  return Sample(std::move(out));
}

}  // namespace gammaratio
