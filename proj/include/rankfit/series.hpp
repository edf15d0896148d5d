#ifndef RANKFIT_SERIES_HPP
#define RANKFIT_SERIES_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace rankfit {

struct RankedEntry {
  std::size_t rank;  // 1-based
  double value;
  std::optional<std::string> label;
};

/// Values ordered by rank 1..n. Every instance satisfies: ranks are exactly
/// 1..n, values are non-increasing, values are finite and > 0, n >= 1.
class RankedSeries {
public:
  /// Validates and adopts values already in rank order. `labels` is either
  /// empty or the same length as `values`.
  static RankedSeries from_ordered(std::vector<double> values,
                                   std::vector<std::optional<std::string>> labels = {});

  std::size_t size() const noexcept { return values_.size(); }
  std::span<const double> values() const noexcept { return values_; }
  double value_at_rank(std::size_t rank) const { return values_.at(rank - 1); }
  RankedEntry entry(std::size_t rank) const;
  const std::optional<std::string>& label_at_rank(std::size_t rank) const { return labels_.at(rank - 1); }
  bool has_labels() const noexcept;

  double max_value() const noexcept { return values_.front(); }
  double min_value() const noexcept { return values_.back(); }

  /// Copy with every value multiplied by `factor` (> 0).
  RankedSeries scaled(double factor) const;
  /// First `count` ranks (count clamped to n).
  RankedSeries head(std::size_t count) const;

  friend bool operator==(const RankedSeries&, const RankedSeries&) = default;

private:
  RankedSeries() = default;

  std::vector<double> values_;
  std::vector<std::optional<std::string>> labels_;
};

}  // namespace rankfit

#endif  // RANKFIT_SERIES_HPP
