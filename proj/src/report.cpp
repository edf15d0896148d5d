#include "rankfit/report.hpp"

#include <fmt/format.h>

#include <cmath>

namespace rankfit {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace

std::string input_digest(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return fmt::format("{:016x}", h);
}

nlohmann::json params_to_json(const ModelParams& params) {
  return std::visit(overloaded{
                        [](const ZipfParams& p) { return nlohmann::json{{"k", p.k}, {"alpha", p.alpha}}; },
                        [](const MandelbrotParams& p) {
                          return nlohmann::json{{"rho", p.rho}, {"epsilon", p.epsilon}, {"n", p.n}};
                        },
                        [](const LavaletteParams& p) {
                          return nlohmann::json{{"k", p.k}, {"b", p.b}, {"n", p.n}};
                        },
                        [](const BetaLikeParams& p) {
                          return nlohmann::json{{"k", p.k}, {"a", p.a}, {"b", p.b}, {"n", p.n}};
                        },
                    },
                    params);
}

nlohmann::json to_json(const FitReport& report) {
  return nlohmann::json{
      {"model", model_name(report.model)},
      {"params", params_to_json(report.params)},
      {"r_squared", report.r_squared},
      {"log_sse", report.log_sse},
      {"residuals", report.residuals},
      {"n", report.n},
      {"warnings", report.warnings},
  };
}

nlohmann::json to_json(const ComparisonReport& report) {
  nlohmann::json fits = nlohmann::json::array();
  for (const FitReport& r : report.reports) fits.push_back(to_json(r));
  return nlohmann::json{
      {"reports", fits},
      {"best_by_r2", model_name(report.best_by_r2)},
      {"nesting_ok", report.nesting_ok},
  };
}

std::string ReportDocument::serialize() const {
  const nlohmann::json doc{
      {"tool", {{"name", "rankfit"}, {"version", tool_version}}},
      {"input_digest", digest},
      {"series", {{"n", n}, {"min", min_value}, {"max", max_value}}},
      {payload_key, payload},
      {"warnings", warnings},
  };
  return doc.dump(2) + "\n";
}

ReportDocument make_document(std::string_view input_bytes, const RankedSeries& series, std::string payload_key,
                             nlohmann::json payload, std::vector<std::string> warnings) {
  ReportDocument doc;
  doc.tool_version = RANKFIT_VERSION;
  doc.digest = input_digest(input_bytes);
  doc.n = series.size();
  doc.min_value = series.min_value();
  doc.max_value = series.max_value();
  doc.payload_key = std::move(payload_key);
  doc.payload = std::move(payload);
  doc.warnings = std::move(warnings);
  return doc;
}

std::string fixed4(double x) {
  std::string s = fmt::format("{:.4f}", x);
  if (s == "-0.0000") s = "0.0000";
  return s;
}

std::string params_summary(const ModelParams& params) {
  return std::visit(
      overloaded{
          [](const ZipfParams& p) { return fmt::format("k={} alpha={}", fixed4(p.k), fixed4(p.alpha)); },
          [](const MandelbrotParams& p) {
            return fmt::format("rho={} epsilon={}", fixed4(p.rho), fixed4(p.epsilon));
          },
          [](const LavaletteParams& p) { return fmt::format("k={} b={}", fixed4(p.k), fixed4(p.b)); },
          [](const BetaLikeParams& p) {
            return fmt::format("k={} b={} a={}", fixed4(p.k), fixed4(p.b), fixed4(p.a));
          },
      },
      params);
}

std::string series_to_csv(const RankedSeries& series) {
  std::string out;
  for (double v : series.values()) out += fmt::format("{}\n", v);
  return out;
}

std::string plot_data_tsv(const RankedSeries& series, const FitReport& fit) {
  std::string out = "rank\tobserved\tfitted\tlog_residual\n";
  for (std::size_t r = 1; r <= series.size(); ++r) {
    const double fitted = evaluate(fit.params, r);
    out += fmt::format("{}\t{}\t{}\t{}\n", r, series.value_at_rank(r), fitted, fit.residuals[r - 1]);
  }
  return out;
}

}  // namespace rankfit
