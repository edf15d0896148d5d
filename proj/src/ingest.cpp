#include "rankfit/ingest.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <numeric>

#include "rankfit/error.hpp"

namespace rankfit {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view line, char delimiter) {
  std::vector<std::string_view> cells;
  std::size_t start = 0;
  for (;;) {
    const auto pos = line.find(delimiter, start);
    if (pos == std::string_view::npos) {
      cells.push_back(trim(line.substr(start)));
      break;
    }
    cells.push_back(trim(line.substr(start, pos - start)));
    start = pos + 1;
  }
  return cells;
}

std::optional<double> parse_double(std::string_view cell) {
  if (cell.empty()) return std::nullopt;
  if (cell.front() == '+') cell.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
  if (ec != std::errc() || ptr != cell.data() + cell.size()) return std::nullopt;
  return v;
}

std::optional<long long> parse_integer(std::string_view cell) {
  if (cell.empty()) return std::nullopt;
  long long v = 0;
  const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
  if (ec != std::errc() || ptr != cell.data() + cell.size()) return std::nullopt;
  return v;
}

struct Row {
  std::size_t line;
  long long rank;  // pre-ranked mode only
  double value;
  std::optional<std::string> label;
};

}  // namespace

RankedSeries rank_raw(std::span<const double> values, std::span<const std::optional<std::string>> labels) {
  if (values.empty()) throw Error(ErrorKind::empty_series, "no values to rank");
  if (!labels.empty() && labels.size() != values.size())
    throw Error(ErrorKind::validation, "label count does not match value count");
  for (std::size_t i = 0; i < values.size(); ++i)
    if (!std::isfinite(values[i]) || !(values[i] > 0.0))
      throw Error(ErrorKind::validation, "value #" + std::to_string(i + 1) + " is not finite and positive");

  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t l, std::size_t r) { return values[l] > values[r]; });

  std::vector<double> sorted;
  std::vector<std::optional<std::string>> sorted_labels;
  sorted.reserve(order.size());
  for (std::size_t i : order) {
    sorted.push_back(values[i]);
    if (!labels.empty()) sorted_labels.push_back(labels[i]);
  }
  return RankedSeries::from_ordered(std::move(sorted), std::move(sorted_labels));
}

IngestResult parse_csv(std::string_view text, const IngestOptions& options) {
  if (!std::isprint(static_cast<unsigned char>(options.delimiter)) && options.delimiter != '\t')
    throw Error(ErrorKind::domain, "delimiter must be a single printable character");

  const bool pre_ranked = options.mode == InputMode::pre_ranked;
  std::vector<Row> rows;
  std::vector<std::string> warnings;
  bool seen_first_row = false;
  bool any_label = false;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    const std::string_view line = trim(text.substr(pos, eol - pos));
    pos = eol + 1;
    ++line_no;
    if (line.empty()) continue;

    const auto cells = split(line, options.delimiter);
    const std::size_t min_cells = pre_ranked ? 2 : 1;
    const std::size_t max_cells = pre_ranked ? 3 : 2;
    const bool first = !seen_first_row;
    seen_first_row = true;

    const std::string_view value_cell = cells.back();
    auto value = parse_double(value_cell);
    if (first && !value) continue;  // header row
    if (cells.size() < min_cells || cells.size() > max_cells)
      throw Error(ErrorKind::parse,
                  "expected " + std::to_string(min_cells) + " to " + std::to_string(max_cells) + " columns, found " +
                      std::to_string(cells.size()),
                  line_no);
    if (!value) throw Error(ErrorKind::parse, "value '" + std::string(value_cell) + "' is not numeric", line_no);
    if (!std::isfinite(*value)) throw Error(ErrorKind::parse, "value is not finite", line_no);

    Row row{line_no, 0, *value, std::nullopt};
    if (pre_ranked) {
      const auto rank = parse_integer(cells.front());
      if (!rank) throw Error(ErrorKind::parse, "rank '" + std::string(cells.front()) + "' is not an integer", line_no);
      row.rank = *rank;
    }
    if (cells.size() == max_cells) {
      row.label = std::string(cells[pre_ranked ? 1 : 0]);
      any_label = true;
    }
    rows.push_back(std::move(row));
  }

  if (rows.empty()) throw Error(ErrorKind::empty_series, "input contains no data rows");

  if (pre_ranked) {
    // Ranks must be a permutation of 1..rows before any row is dropped.
    const std::size_t n = rows.size();
    std::vector<std::size_t> seen_at(n + 1, 0);
    for (const Row& row : rows) {
      if (row.rank < 1 || static_cast<std::size_t>(row.rank) > n)
        throw Error(ErrorKind::validation, "rank " + std::to_string(row.rank) + " outside 1.." + std::to_string(n),
                    row.line);
      auto& slot = seen_at[static_cast<std::size_t>(row.rank)];
      if (slot != 0)
        throw Error(ErrorKind::validation,
                    "duplicate rank " + std::to_string(row.rank) + " (first seen on line " + std::to_string(slot) + ")",
                    row.line);
      slot = row.line;
    }
    std::sort(rows.begin(), rows.end(), [](const Row& l, const Row& r) { return l.rank < r.rank; });
  }

  std::vector<double> values;
  std::vector<std::optional<std::string>> labels;
  for (Row& row : rows) {
    if (!(row.value > 0.0)) {
      if (options.zero_policy == ZeroPolicy::reject)
        throw Error(ErrorKind::validation, "non-positive value " + std::to_string(row.value), row.line);
      warnings.push_back("line " + std::to_string(row.line) + ": dropped non-positive value " +
                         std::to_string(row.value));
      continue;
    }
    values.push_back(row.value);
    labels.push_back(std::move(row.label));
  }
  if (values.empty()) throw Error(ErrorKind::empty_series, "no positive values remain after dropping");
  if (!any_label) labels.clear();

  if (!pre_ranked) return IngestResult{rank_raw(values, labels), std::move(warnings)};

  for (std::size_t i = 1; i < values.size(); ++i)
    if (values[i] > values[i - 1])
      throw Error(ErrorKind::validation,
                  "value at rank " + std::to_string(i + 1) + " exceeds the value at rank " + std::to_string(i));
  return IngestResult{RankedSeries::from_ordered(std::move(values), std::move(labels)), std::move(warnings)};
}

}  // namespace rankfit
