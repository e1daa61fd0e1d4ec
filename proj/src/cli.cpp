#include "gammaratio/cli.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "gammaratio/closed_forms.hpp"
#include "gammaratio/errors.hpp"
#include "gammaratio/indices.hpp"
#include "gammaratio/report.hpp"
#include "gammaratio/verify.hpp"

namespace gammaratio::cli {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::optional<double> parse_real(std::string_view token) {
  token = trim(token);
  if (token.size() >= 2 && token.front() == '"' && token.back() == '"') {
    token = trim(token.substr(1, token.size() - 2));
  }
  if (!token.empty() && token.front() == '+') token.remove_prefix(1);
  if (token.empty()) return std::nullopt;
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) return std::nullopt;
  return value;
}

std::vector<std::string_view> split_csv(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    if (line[i] == '"') quoted = !quoted;
    if (line[i] == ',' && !quoted) {
      fields.push_back(line.substr(start, i - start));
      start = i + 1;
    }
  }
  fields.push_back(line.substr(start));
  return fields;
}

std::string unquote(std::string_view field) {
  field = trim(field);
  if (field.size() >= 2 && field.front() == '"' && field.back() == '"') {
    field = field.substr(1, field.size() - 2);
  }
  return std::string(field);
}

double checked_observation(std::string_view token, std::size_t line_no) {
  const auto v = parse_real(token);
  if (!v) {
    throw DataError("line " + std::to_string(line_no) + ": not a number: '" +
                    std::string(trim(token)) + "'");
  }
  if (!std::isfinite(*v) || *v <= 0.0) {
    throw DataError("line " + std::to_string(line_no) +
                    ": observation must be finite and > 0, got '" + std::string(trim(token)) + "'");
  }
  return *v;
}

struct RunConfig {
  std::string command;
  std::optional<std::string> input_path;
  std::vector<std::string> index{"all"};
  std::optional<double> alpha;
  std::optional<double> lambda;
  std::optional<std::size_t> n;
  std::optional<std::size_t> reps;
  std::uint64_t seed = kDefaultSeed;
  double z_max = kDefaultZMax;
  bool debias = false;
  std::string format = "json";
  std::optional<std::string> column;
  unsigned workers = 0;
  std::vector<std::string> grid;
};

OutputFormat parse_format(const std::string& f) {
  if (f == "json") return OutputFormat::Json;
  if (f == "table") return OutputFormat::Table;
  if (f == "csv") return OutputFormat::Csv;
  throw UsageError("unknown --format '" + f + "' (expected json, table or csv)");
}

std::vector<IndexKind> selected_kinds(const RunConfig& cfg) {
  std::vector<IndexKind> kinds;
  for (const auto& name : cfg.index) {
    if (name == "all") {
      kinds.assign(std::begin(kAllIndexKinds), std::end(kAllIndexKinds));
      continue;
    }
    const auto k = parse_index_kind(name);
    if (!k) throw UsageError("unknown index '" + name + "'");
    if (std::find(kinds.begin(), kinds.end(), *k) == kinds.end()) kinds.push_back(*k);
  }
  if (kinds.empty()) throw UsageError("no index selected");
  return kinds;
}

double require_positive(const std::optional<double>& v, const char* flag) {
  if (!v) throw UsageError(std::string(flag) + " is required");
  if (!std::isfinite(*v) || *v <= 0.0) throw UsageError(std::string(flag) + " must be > 0");
  return *v;
}

std::size_t require_count(const std::optional<std::size_t>& v, const char* flag) {
  if (!v) throw UsageError(std::string(flag) + " is required");
  return *v;
}

bool uses_lambda(const std::vector<IndexKind>& kinds) {
  return std::find(kinds.begin(), kinds.end(), IndexKind::Vmr) != kinds.end();
}

GammaParams params_for(const RunConfig& cfg, const std::vector<IndexKind>& kinds) {
  const double alpha = require_positive(cfg.alpha, "--alpha");
  double lambda = 1.0;
  if (uses_lambda(kinds) || cfg.lambda) lambda = require_positive(cfg.lambda, "--lambda");
  return {alpha, lambda};
}

int cmd_compute(const RunConfig& cfg, std::ostream& out) {
  if (!cfg.input_path) throw UsageError("compute requires --input");
  const auto kinds = selected_kinds(cfg);
  const Sample sample = read_sample_file(*cfg.input_path, cfg.column);

  std::optional<double> alpha;
  std::string alpha_source;
  if (cfg.debias) {
    if (cfg.alpha) {
      alpha = require_positive(cfg.alpha, "--alpha");
      alpha_source = "given";
    } else {
      alpha = method_of_moments_alpha(sample);
      alpha_source = "method_of_moments";
    }
  }

  std::vector<Record> rows;
  for (IndexKind kind : kinds) {
    const double value = compute_index(kind, sample);
    Record rec{{"index", std::string(to_string(kind))},
               {"n", static_cast<std::int64_t>(sample.size())},
               {"value", value}};
    if (alpha) {
      // The correction factors never involve the rate.
      const GammaParams p{*alpha, 1.0};
      rec.emplace_back("debiased", debias(kind, p, sample.size(), value));
      rec.emplace_back("alpha", *alpha);
      rec.emplace_back("alpha_source", alpha_source);
    }
    rows.push_back(std::move(rec));
  }
  out << render(parse_format(cfg.format), rows);
  return kExitOk;
}

int cmd_population(const RunConfig& cfg, std::ostream& out) {
  const auto kinds = selected_kinds(cfg);
  const GammaParams p = params_for(cfg, kinds);
  std::vector<Record> rows;
  for (IndexKind kind : kinds) {
    rows.push_back({{"kind", std::string(to_string(kind))},
                    {"alpha", p.alpha.value()},
                    {"lambda", p.lambda.value()},
                    {"population", population_index(kind, p)}});
  }
  out << render(parse_format(cfg.format), rows);
  return kExitOk;
}

int cmd_expect(const RunConfig& cfg, std::ostream& out) {
  const auto kinds = selected_kinds(cfg);
  const GammaParams p = params_for(cfg, kinds);
  const std::size_t n = require_count(cfg.n, "--n");
  std::vector<Record> rows;
  for (IndexKind kind : kinds) {
    Record rec = to_record(expect_index(kind, p, n));
    rec.insert(rec.begin() + 1, {"alpha", p.alpha.value()});
    rec.insert(rec.begin() + 2, {"lambda", p.lambda.value()});
    rows.push_back(std::move(rec));
  }
  out << render(parse_format(cfg.format), rows);
  return kExitOk;
}

McOptions mc_options(const RunConfig& cfg) {
  if (!std::isfinite(cfg.z_max) || cfg.z_max <= 0.0) throw UsageError("--z-max must be > 0");
  McOptions o;
  o.seed = cfg.seed;
  o.workers = cfg.workers;
  o.z_max = cfg.z_max;
  return o;
}

std::size_t checked_reps(std::size_t reps) {
  if (reps < kMinReps) {
    throw UsageError("--reps must be >= " + std::to_string(kMinReps) + ", got " +
                     std::to_string(reps));
  }
  return reps;
}

int cmd_simulate(const RunConfig& cfg, std::ostream& out) {
  const auto kinds = selected_kinds(cfg);
  const double alpha = require_positive(cfg.alpha, "--alpha");
  const double lambda = require_positive(cfg.lambda, "--lambda");
  const std::size_t n = require_count(cfg.n, "--n");
  const std::size_t reps = checked_reps(cfg.reps.value_or(200'000));
  const McOptions base = mc_options(cfg);
  const Estimator est = cfg.debias ? Estimator::Debiased : Estimator::Raw;

  std::vector<Record> rows;
  bool all_pass = true;
  for (IndexKind kind : kinds) {
    McOptions o = base;
    const std::string label =
        std::string(to_string(kind)) + (est == Estimator::Debiased ? "_debiased" : "");
    o.stream_offset = cell_stream_offset(label, alpha, lambda, n);
    const McReport r = mc_expectation(kind, {alpha, lambda}, n, reps, o, est);
    all_pass = all_pass && r.pass;
    rows.push_back(to_record(r));
  }
  out << render(parse_format(cfg.format), rows);
  return all_pass ? kExitOk : kExitVerificationFailed;
}

template <typename T>
std::vector<T> parse_list(const std::string& key, std::string_view values) {
  std::vector<T> out;
  for (std::string_view tok : split_csv(values)) {
    const auto v = parse_real(tok);
    if (!v || !std::isfinite(*v) || *v <= 0.0) {
      throw UsageError("--grid " + key + ": bad value '" + std::string(tok) + "'");
    }
    if constexpr (std::is_integral_v<T>) {
      if (*v != std::floor(*v)) throw UsageError("--grid " + key + ": expected an integer");
      out.push_back(static_cast<T>(*v));
    } else {
      out.push_back(*v);
    }
  }
  return out;
}

VerifyGrid parse_grid(const std::vector<std::string>& tokens) {
  VerifyGrid grid;
  for (const auto& tok : tokens) {
    const auto eq = tok.find('=');
    if (eq == std::string::npos) throw UsageError("--grid expects key=v1,v2,... got '" + tok + "'");
    const std::string key = tok.substr(0, eq);
    const std::string_view values = std::string_view(tok).substr(eq + 1);
    if (key == "alpha") {
      grid.alphas = parse_list<double>(key, values);
    } else if (key == "lambda") {
      grid.lambdas = parse_list<double>(key, values);
    } else if (key == "n") {
      grid.ns = parse_list<std::size_t>(key, values);
      for (std::size_t n : grid.ns)
        if (n < 2) throw UsageError("--grid n values must be >= 2");
    } else {
      throw UsageError("--grid: unknown key '" + key + "' (alpha, lambda, n)");
    }
  }
  return grid;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  SuiteOptions opts;
  opts.grid = parse_grid(cfg.grid);
  if (cfg.reps) opts.reps = checked_reps(*cfg.reps);
  opts.mc = mc_options(cfg);
  const SuiteReport report = run_verify_suite(opts);
  const OutputFormat format = parse_format(cfg.format);
  if (format == OutputFormat::Table) {
    out << render_suite_table(report);
  } else if (format == OutputFormat::Csv) {
    std::vector<Record> rows;
    for (const auto* group : {&report.index_cells, &report.lukacs, &report.dirichlet})
      for (const auto& r : *group) rows.push_back(to_record(r));
    out << render_csv(rows);
  } else {
    out << render_suite_json(report);
  }
  return report.pass ? kExitOk : kExitVerificationFailed;
}

void add_common_options(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--index", cfg.index, "gini, theil_t, atkinson, vmr or all")->delimiter(',');
  sub->add_option("--format", cfg.format, "json (default), table or csv");
}

void add_params(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--alpha", cfg.alpha, "gamma shape");
  sub->add_option("--lambda", cfg.lambda, "gamma rate");
}

void add_mc_options(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--reps", cfg.reps, "Monte Carlo replicates (>= 10000)");
  sub->add_option("--seed", cfg.seed, "64-bit seed");
  sub->add_option("--z-max", cfg.z_max, "pass band in standard errors");
  sub->add_option("--workers", cfg.workers, "worker threads (0 = all cores)");
}

}  // namespace

Sample parse_sample_text(std::string_view text, const std::optional<std::string>& column) {
  std::vector<std::pair<std::size_t, std::string_view>> lines;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    const auto end = nl == std::string_view::npos ? text.size() : nl;
    ++line_no;
    const std::string_view line = trim(text.substr(pos, end - pos));
    if (!line.empty() && line.front() != '#') lines.emplace_back(line_no, line);
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }
  if (lines.empty()) throw DataError("input contains no observations");

  const bool csv = column.has_value() || !parse_real(lines.front().second).has_value();
  std::vector<double> values;
  if (!csv) {
    values.reserve(lines.size());
    for (const auto& [no, line] : lines) values.push_back(checked_observation(line, no));
    return Sample(std::move(values));
  }

  const std::string wanted = column.value_or("y");
  const auto header = split_csv(lines.front().second);
  std::size_t col = header.size();
  for (std::size_t c = 0; c < header.size(); ++c) {
    if (unquote(header[c]) == wanted) {
      col = c;
      break;
    }
  }
  if (col == header.size()) {
    throw DataError("line " + std::to_string(lines.front().first) + ": no column named '" +
                    wanted + "' in header");
  }
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& [no, line] = lines[i];
    const auto fields = split_csv(line);
    if (col >= fields.size()) {
      throw DataError("line " + std::to_string(no) + ": missing column '" + wanted + "'");
    }
    values.push_back(checked_observation(fields[col], no));
  }
  if (values.empty()) throw DataError("input contains no observations");
  return Sample(std::move(values));
}

Sample read_sample_file(const std::string& path, const std::optional<std::string>& column) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open input file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_sample_text(buf.str(), column);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Ratio-type inequality indices and their exact expectations under the gamma law",
               "gammaratio"};
  app.require_subcommand(1);

  auto* compute = app.add_subcommand("compute", "compute indices of a data sample");
  add_common_options(compute, cfg);
  compute->add_option("--input", cfg.input_path, "data file (one value per line, or CSV)");
  compute->add_option("--column", cfg.column, "CSV column to read (default y)");
  compute->add_option("--alpha", cfg.alpha, "gamma shape for --debias");
  compute->add_flag("--debias", cfg.debias, "apply the gamma bias correction");

  auto* population = app.add_subcommand("population", "population indices of a gamma law");
  add_common_options(population, cfg);
  add_params(population, cfg);

  auto* expect = app.add_subcommand("expect", "exact finite-sample expectations");
  add_common_options(expect, cfg);
  add_params(expect, cfg);
  expect->add_option("--n", cfg.n, "sample size");

  auto* simulate = app.add_subcommand("simulate", "Monte Carlo check of one expectation");
  add_common_options(simulate, cfg);
  add_params(simulate, cfg);
  add_mc_options(simulate, cfg);
  simulate->add_option("--n", cfg.n, "sample size");
  simulate->add_flag("--debias", cfg.debias, "simulate the debiased estimator");

  auto* verify = app.add_subcommand("verify", "run the full verification suite");
  verify->add_option("--format", cfg.format, "json (default), table or csv");
  add_mc_options(verify, cfg);
  verify->add_option("--grid", cfg.grid, "restrict the grid, e.g. alpha=0.5,1 n=2");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    std::string msg = e.what();
    std::replace(msg.begin(), msg.end(), '\n', ' ');
    err << "E_USAGE: " << msg << '\n';
    return kExitUsage;
  }

  try {
    if (*compute) return cmd_compute(cfg, out);
    if (*population) return cmd_population(cfg, out);
    if (*expect) return cmd_expect(cfg, out);
    if (*simulate) return cmd_simulate(cfg, out);
    return cmd_verify(cfg, out);
  } catch (const Error& e) {
    err << e.code() << ": " << e.what() << '\n';
    const std::string_view code = e.code();
    if (code == "E_USAGE") return kExitUsage;
    if (code == "E_NUMERIC") return kExitNumeric;
    return kExitData;
  }
}

}  // namespace gammaratio::cli
