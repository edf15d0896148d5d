#ifndef RANKFIT_INGEST_HPP
#define RANKFIT_INGEST_HPP

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rankfit/series.hpp"

namespace rankfit {

enum class InputMode { raw_values, pre_ranked };
enum class ZeroPolicy { reject, drop_with_warning };

struct IngestOptions {
  InputMode mode = InputMode::raw_values;
  ZeroPolicy zero_policy = ZeroPolicy::reject;
  char delimiter = ',';
};

struct IngestResult {
  RankedSeries series;
  std::vector<std::string> warnings;
};

/// Parses delimited text. Raw-values rows are `value` or `label,value`;
/// pre-ranked rows are `rank,value` or `rank,label,value`. A first row whose
/// value cell is not numeric is a header. Blank lines are skipped.
IngestResult parse_csv(std::string_view text, const IngestOptions& options = {});

/// Stable descending sort with dense ranks 1..n; ties keep input order.
RankedSeries rank_raw(std::span<const double> values, std::span<const std::optional<std::string>> labels = {});

}  // namespace rankfit

#endif  // RANKFIT_INGEST_HPP
