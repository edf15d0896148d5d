#include "rankfit/cli.hpp"

#include <fmt/format.h>

#include <fstream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "rankfit/error.hpp"
#include "rankfit/fit.hpp"
#include "rankfit/generate.hpp"
#include "rankfit/ingest.hpp"
#include "rankfit/models.hpp"
#include "rankfit/report.hpp"

namespace rankfit::cli {

namespace {

struct GlobalFlags {
  std::string delimiter = ",";
  std::string zero_policy = "drop";
  bool pre_ranked = false;
  std::string output;
  bool quiet = false;
};

struct ModelFlags {
  std::string model = "beta-like";
  std::optional<double> k, a, b, alpha, rho, epsilon;
  long long n = -1;
  double sigma = 0.0;
  std::uint64_t seed = 0;
};

struct SimonFlags {
  double p_new = 0.1;
  long long steps = 1;
  std::uint64_t seed = 0;
};

// Thrown for invalid flag values discovered after CLI11 parsing.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::parse:
    case ErrorKind::validation:
    case ErrorKind::empty_series: return kExitInput;
    case ErrorKind::domain:
    case ErrorKind::insufficient_data:
    case ErrorKind::singular_system:
    case ErrorKind::fit_failure: return kExitFit;
  }
  return kExitFit;
}

char parse_delimiter(const std::string& text) {
  if (text == "\\t" || text == "tab" || text == "\t") return '\t';
  if (text.size() != 1 || !std::isprint(static_cast<unsigned char>(text[0])))
    throw UsageError("--delimiter must be a single printable character (or \\t)");
  return text[0];
}

IngestOptions ingest_options(const GlobalFlags& g) {
  IngestOptions opts;
  opts.delimiter = parse_delimiter(g.delimiter);
  opts.mode = g.pre_ranked ? InputMode::pre_ranked : InputMode::raw_values;
  opts.zero_policy = g.zero_policy == "reject" ? ZeroPolicy::reject : ZeroPolicy::drop_with_warning;
  return opts;
}

Model model_flag(const std::string& name) {
  const auto m = parse_model(name);
  if (!m) throw UsageError("unknown model '" + name + "' (zipf, mandelbrot, lavalette, beta-like)");
  return *m;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::parse, "cannot read input file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Writes to --output when given, else to `out`.
void emit(const GlobalFlags& g, std::ostream& out, const std::string& text) {
  if (g.output.empty()) {
    out << text;
    return;
  }
  std::ofstream file(g.output, std::ios::binary | std::ios::trunc);
  if (!file) throw Error(ErrorKind::parse, "cannot write output file '" + g.output + "'");
  file << text;
  if (!file) throw Error(ErrorKind::parse, "failed writing output file '" + g.output + "'");
}

// Human summary goes to stdout when the machine output went to a file.
std::ostream& summary_stream(const GlobalFlags& g, std::ostream& out, std::ostream& err) {
  return g.output.empty() ? err : out;
}

void print_warnings(const GlobalFlags& g, std::ostream& err, const std::vector<std::string>& warnings) {
  if (g.quiet) return;
  for (const auto& w : warnings) err << "warning: " << w << "\n";
}

int cmd_fit(const GlobalFlags& g, const std::string& input, const std::string& model_name_flag, std::ostream& out,
            std::ostream& err) {
  const Model model = model_flag(model_name_flag);
  const IngestOptions opts = ingest_options(g);
  const std::string bytes = read_file(input);
  IngestResult ingested = parse_csv(bytes, opts);
  const FitReport rep = fit_model(model, ingested.series);

  std::vector<std::string> warnings = ingested.warnings;
  warnings.insert(warnings.end(), rep.warnings.begin(), rep.warnings.end());
  const ReportDocument doc = make_document(bytes, ingested.series, "fit", to_json(rep), warnings);
  emit(g, out, doc.serialize());

  print_warnings(g, err, warnings);
  if (!g.quiet)
    summary_stream(g, out, err) << fmt::format("{}  {}  R^2={}  n={}\n", model_name(model), params_summary(rep.params),
                                               fixed4(rep.r_squared), rep.n);
  return kExitOk;
}

int cmd_compare(const GlobalFlags& g, const std::string& input, std::ostream& out, std::ostream& err) {
  const IngestOptions opts = ingest_options(g);
  const std::string bytes = read_file(input);
  IngestResult ingested = parse_csv(bytes, opts);
  const ComparisonReport cmp = compare_models(ingested.series);

  std::vector<std::string> warnings = ingested.warnings;
  for (const FitReport& r : cmp.reports) warnings.insert(warnings.end(), r.warnings.begin(), r.warnings.end());
  const ReportDocument doc = make_document(bytes, ingested.series, "comparison", to_json(cmp), warnings);
  emit(g, out, doc.serialize());

  print_warnings(g, err, warnings);
  if (!g.quiet) {
    std::ostream& s = summary_stream(g, out, err);
    s << fmt::format("{:<12}{:<44}{}\n", "model", "params", "R^2");
    for (const FitReport& r : cmp.reports)
      s << fmt::format("{:<12}{:<44}{}\n", model_name(r.model), params_summary(r.params), fixed4(r.r_squared));
    s << fmt::format("best: {}  nesting: {}\n", model_name(cmp.best_by_r2), cmp.nesting_ok ? "ok" : "VIOLATED");
  }
  return kExitOk;
}

double require_flag(const std::optional<double>& v, const char* flag, const std::string& model) {
  if (!v) throw UsageError(std::string("--") + flag + " is required for model " + model);
  return *v;
}

int cmd_generate(const GlobalFlags& g, const ModelFlags& f, std::ostream& out) {
  const Model model = model_flag(f.model);
  if (f.n < 1) throw UsageError("--n must be >= 1");
  const auto n = static_cast<std::size_t>(f.n);

  ModelParams params;
  switch (model) {
    case Model::zipf:
      params = ZipfParams{require_flag(f.k, "k", f.model), require_flag(f.alpha, "alpha", f.model)};
      break;
    case Model::mandelbrot:
      params = MandelbrotParams{require_flag(f.rho, "rho", f.model), require_flag(f.epsilon, "epsilon", f.model), n};
      break;
    case Model::lavalette:
      params = LavaletteParams{require_flag(f.k, "k", f.model), require_flag(f.b, "b", f.model), n};
      break;
    case Model::beta_like:
      params = BetaLikeParams{require_flag(f.k, "k", f.model), require_flag(f.a, "a", f.model),
                              require_flag(f.b, "b", f.model), n};
      break;
  }
  try {
    validate(params);
    if (!(f.sigma >= 0.0)) throw UsageError("--sigma must be >= 0");
  } catch (const Error& e) {
    throw UsageError(e.what());
  }

  const RankedSeries series = generate_synthetic(params, NoiseSpec{f.sigma, f.seed}, n);
  emit(g, out, series_to_csv(series));
  return kExitOk;
}

int cmd_simulate(const GlobalFlags& g, const SimonFlags& f, std::ostream& out) {
  if (f.steps < 1) throw UsageError("--steps must be >= 1");
  const SimonConfig config{f.p_new, static_cast<std::size_t>(f.steps), f.seed};
  try {
    validate(config);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  emit(g, out, series_to_csv(simulate_simon(config)));
  return kExitOk;
}

int cmd_plotdata(const GlobalFlags& g, const std::string& input, const std::string& model_name_flag,
                 std::ostream& out, std::ostream& err) {
  const Model model = model_flag(model_name_flag);
  const IngestOptions opts = ingest_options(g);
  const std::string bytes = read_file(input);
  IngestResult ingested = parse_csv(bytes, opts);
  const FitReport rep = fit_model(model, ingested.series);
  emit(g, out, plot_data_tsv(ingested.series, rep));

  std::vector<std::string> warnings = ingested.warnings;
  warnings.insert(warnings.end(), rep.warnings.begin(), rep.warnings.end());
  print_warnings(g, err, warnings);
  return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fit rank-order laws (Zipf, Zipf-Mandelbrot, Lavalette, two-exponent) to ranked data", "rankfit"};
  app.set_version_flag("--version", RANKFIT_VERSION);
  app.require_subcommand(1);
  app.fallthrough();

  GlobalFlags g;
  app.add_option("--delimiter", g.delimiter, "Input column delimiter (one character, or \\t)");
  app.add_option("--zero-policy", g.zero_policy, "What to do with non-positive values")
      ->check(CLI::IsMember({"reject", "drop"}));
  app.add_flag("--pre-ranked", g.pre_ranked, "Input rows are rank,value or rank,label,value");
  app.add_option("--output,-o", g.output, "Write the report or data here instead of stdout");
  app.add_flag("--quiet,-q", g.quiet, "Suppress summaries, warnings and diagnostics");

  std::string input;
  std::string fit_model_flag = "beta-like";
  auto* fit = app.add_subcommand("fit", "Fit one model and write a JSON report");
  fit->add_option("input", input, "Input CSV/TSV")->required();
  fit->add_option("--model,-m", fit_model_flag, "zipf | mandelbrot | lavalette | beta-like");

  auto* compare = app.add_subcommand("compare", "Fit all four models and compare them");
  compare->add_option("input", input, "Input CSV/TSV")->required();

  ModelFlags mf;
  auto* generate = app.add_subcommand("generate", "Write a synthetic ranked series as CSV");
  generate->add_option("--model,-m", mf.model, "zipf | mandelbrot | lavalette | beta-like")->required();
  generate->add_option("--k", mf.k, "Scale factor");
  generate->add_option("--a", mf.a, "Beta-like rank exponent");
  generate->add_option("--b", mf.b, "Beta-like/Lavalette tail exponent");
  generate->add_option("--alpha", mf.alpha, "Zipf exponent");
  generate->add_option("--rho", mf.rho, "Mandelbrot rank offset");
  generate->add_option("--epsilon", mf.epsilon, "Mandelbrot exponent shift");
  generate->add_option("--n", mf.n, "Series length")->required();
  generate->add_option("--sigma", mf.sigma, "Log-space noise standard deviation");
  generate->add_option("--seed", mf.seed, "Random seed");

  SimonFlags sf;
  auto* simulate = app.add_subcommand("simulate", "Run a Simon preferential-attachment process");
  simulate->add_option("--p-new", sf.p_new, "Probability a step opens a new source")->required();
  simulate->add_option("--steps", sf.steps, "Total items allocated")->required();
  simulate->add_option("--seed", sf.seed, "Random seed");

  std::string plot_model_flag = "beta-like";
  auto* plotdata = app.add_subcommand("plotdata", "Write rank/observed/fitted/residual TSV for plotting");
  plotdata->add_option("input", input, "Input CSV/TSV")->required();
  plotdata->add_option("--model,-m", plot_model_flag, "zipf | mandelbrot | lavalette | beta-like");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    if (!g.quiet) err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*fit) return cmd_fit(g, input, fit_model_flag, out, err);
    if (*compare) return cmd_compare(g, input, out, err);
    if (*generate) return cmd_generate(g, mf, out);
    if (*simulate) return cmd_simulate(g, sf, out);
    if (*plotdata) return cmd_plotdata(g, input, plot_model_flag, out, err);
  } catch (const UsageError& e) {
    if (!g.quiet) err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    if (!g.quiet) err << "error: " << to_string(e.kind()) << ": " << e.what() << "\n";
    return exit_code_for(e.kind());
  }
  return kExitUsage;
}

}  // namespace rankfit::cli
