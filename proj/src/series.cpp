#include "rankfit/series.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "rankfit/error.hpp"

namespace rankfit {

RankedSeries RankedSeries::from_ordered(std::vector<double> values,
                                        std::vector<std::optional<std::string>> labels) {
  if (values.empty()) throw Error(ErrorKind::empty_series, "series has no entries");
  if (!labels.empty() && labels.size() != values.size())
    throw Error(ErrorKind::validation, "label count does not match value count");

  for (std::size_t i = 0; i < values.size(); ++i) {
    const double v = values[i];
    if (!std::isfinite(v) || v <= 0.0)
      throw Error(ErrorKind::validation,
                  "value at rank " + std::to_string(i + 1) + " is not finite and positive");
    if (i > 0 && v > values[i - 1])
      throw Error(ErrorKind::validation,
                  "value at rank " + std::to_string(i + 1) + " exceeds the value at rank " + std::to_string(i));
  }

  RankedSeries s;
  s.values_ = std::move(values);
  s.labels_ = labels.empty() ? std::vector<std::optional<std::string>>(s.values_.size()) : std::move(labels);
  return s;
}

RankedEntry RankedSeries::entry(std::size_t rank) const {
  return RankedEntry{rank, values_.at(rank - 1), labels_.at(rank - 1)};
}

bool RankedSeries::has_labels() const noexcept {
  return std::any_of(labels_.begin(), labels_.end(), [](const auto& l) { return l.has_value(); });
}

RankedSeries RankedSeries::scaled(double factor) const {
  if (!(factor > 0.0) || !std::isfinite(factor))
    throw Error(ErrorKind::domain, "scale factor must be finite and positive");
  std::vector<double> v(values_);
  for (double& x : v) x *= factor;
  return from_ordered(std::move(v), labels_);
}

RankedSeries RankedSeries::head(std::size_t count) const {
  count = std::min(count, values_.size());
  if (count == 0) throw Error(ErrorKind::empty_series, "head of zero ranks");
  return from_ordered(std::vector<double>(values_.begin(), values_.begin() + count),
                      std::vector<std::optional<std::string>>(labels_.begin(), labels_.begin() + count));
}

}  // namespace rankfit
