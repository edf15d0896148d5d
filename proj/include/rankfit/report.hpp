#ifndef RANKFIT_REPORT_HPP
#define RANKFIT_REPORT_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "rankfit/fit.hpp"
#include "rankfit/series.hpp"

namespace rankfit {

/// FNV-1a 64-bit checksum, as 16 lowercase hex digits.
std::string input_digest(std::string_view bytes);

nlohmann::json params_to_json(const ModelParams& params);
nlohmann::json to_json(const FitReport& report);
nlohmann::json to_json(const ComparisonReport& report);

/// Machine-readable report written by the fit and compare commands.
/// nlohmann::json objects keep keys sorted, so serialization is byte-stable.
struct ReportDocument {
  std::string tool_version;
  std::string digest;
  std::size_t n = 0;
  double min_value = 0.0;
  double max_value = 0.0;
  std::string payload_key;  // "fit" or "comparison"
  nlohmann::json payload;
  std::vector<std::string> warnings;

  std::string serialize() const;
};

ReportDocument make_document(std::string_view input_bytes, const RankedSeries& series, std::string payload_key,
                             nlohmann::json payload, std::vector<std::string> warnings);

/// Fixed 4-decimal rendering, never "-0.0000".
std::string fixed4(double x);
/// "k=0.0273 a=0.4058 b=0.9910" style parameter listing.
std::string params_summary(const ModelParams& params);

/// One value per line in rank order (raw-values schema), shortest round-trip digits.
std::string series_to_csv(const RankedSeries& series);
/// TSV with header rank, observed, fitted, log_residual.
std::string plot_data_tsv(const RankedSeries& series, const FitReport& fit);

}  // namespace rankfit

#endif  // RANKFIT_REPORT_HPP
