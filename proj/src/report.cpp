#include "gammaratio/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "json.hpp"

namespace gammaratio {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string format_real(double x, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x);
  return buf;
}

std::string to_text(const Value& v, int digits) {
  return std::visit(
      [&](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, std::string>) {
          return x;
        } else if constexpr (std::is_same_v<T, double>) {
          return format_real(x, digits);
        } else if constexpr (std::is_same_v<T, bool>) {
          return x ? "true" : "false";
        } else {
          return std::to_string(x);
        }
      },
      v);
}

ordered_json to_json(const Record& rec) {
  ordered_json obj = ordered_json::object();
  for (const auto& [key, value] : rec) {
    std::visit([&](const auto& x) { obj[key] = x; }, value);
  }
  return obj;
}

ordered_json to_json_array(const std::vector<Record>& rows) {
  ordered_json arr = ordered_json::array();
  for (const auto& r : rows) arr.push_back(to_json(r));
  return arr;
}

template <typename T>
std::vector<Record> records(const std::vector<T>& items) {
  std::vector<Record> rows;
  rows.reserve(items.size());
  for (const auto& it : items) rows.push_back(to_record(it));
  return rows;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

Record to_record(const McReport& r) {
  return {{"kind", r.kind},
          {"alpha", r.alpha},
          {"lambda", r.lambda},
          {"n", static_cast<std::int64_t>(r.n)},
          {"reps", static_cast<std::int64_t>(r.reps)},
          {"mc_mean", r.mc_mean},
          {"mc_stderr", r.mc_stderr},
          {"target", r.target},
          {"z_score", r.z_score},
          {"pass", r.pass}};
}

Record to_record(const ExpectationResult& r) {
  return {{"kind", std::string(to_string(r.kind))},
          {"n", static_cast<std::int64_t>(r.n)},
          {"expectation", r.expectation},
          {"population", r.population},
          {"bias", r.bias}};
}

Record to_record(const IdentityReport& r) {
  std::string params;
  for (const auto& [k, v] : r.params) {
    if (!params.empty()) params += ' ';
    params += k + "=" + format_real(v, 17);
  }
  return {{"name", r.name},
          {"params", params},
          {"closed_form", r.closed_form},
          {"numeric", r.numeric},
          {"abs_diff", std::fabs(r.closed_form - r.numeric)},
          {"tolerance", r.tolerance},
          {"pass", r.pass}};
}

std::string render_json(const std::vector<Record>& rows) {
  return to_json_array(rows).dump(2) + "\n";
}

std::string render_table(const std::vector<Record>& rows) {
  if (rows.empty()) return "";
  const Record& head = rows.front();
  std::vector<std::vector<std::string>> cells;
  std::vector<std::size_t> width(head.size());
  std::vector<std::string> header;
  for (std::size_t c = 0; c < head.size(); ++c) {
    header.push_back(head[c].first);
    width[c] = head[c].first.size();
  }
  for (const auto& r : rows) {
    std::vector<std::string> line;
    for (std::size_t c = 0; c < r.size() && c < width.size(); ++c) {
      line.push_back(to_text(r[c].second, 7));
      width[c] = std::max(width[c], line.back().size());
    }
    cells.push_back(std::move(line));
  }
  std::ostringstream os;
  auto emit = [&](const std::vector<std::string>& line) {
    for (std::size_t c = 0; c < line.size(); ++c) {
      if (c > 0) os << "  ";
      os << line[c];
      if (c + 1 < line.size()) os << std::string(width[c] - line[c].size(), ' ');
    }
    os << '\n';
  };
  emit(header);
  for (const auto& line : cells) emit(line);
  return os.str();
}

std::string render_csv(const std::vector<Record>& rows) {
  if (rows.empty()) return "";
  std::ostringstream os;
  for (std::size_t c = 0; c < rows.front().size(); ++c) {
    if (c > 0) os << ',';
    os << rows.front()[c].first;
  }
  os << '\n';
  for (const auto& r : rows) {
    for (std::size_t c = 0; c < r.size(); ++c) {
      if (c > 0) os << ',';
      os << csv_escape(to_text(r[c].second, 17));
    }
    os << '\n';
  }
  return os.str();
}

std::string render(OutputFormat format, const std::vector<Record>& rows) {
  switch (format) {
    case OutputFormat::Json:
      return render_json(rows);
    case OutputFormat::Table:
      return render_table(rows);
    case OutputFormat::Csv:
      return render_csv(rows);
  }
  return {};
}

std::string render_suite_json(const SuiteReport& report) {
  ordered_json obj = ordered_json::object();
  obj["pass"] = report.pass;
  obj["failures"] = report.failures;
  obj["index_cells"] = to_json_array(records(report.index_cells));
  obj["lukacs"] = to_json_array(records(report.lukacs));
  obj["dirichlet"] = to_json_array(records(report.dirichlet));
  obj["identities"] = to_json_array(records(report.identities));
  return obj.dump(2) + "\n";
}

std::string render_suite_table(const SuiteReport& report) {
  std::ostringstream os;
  os << render_table(records(report.index_cells)) << '\n'
     << render_table(records(report.lukacs)) << '\n'
     << render_table(records(report.dirichlet)) << '\n'
     << render_table(records(report.identities)) << '\n';
  for (const auto& f : report.failures) os << "FAIL: " << f << '\n';
  os << (report.pass ? "suite: PASS" : "suite: FAIL") << '\n';
  return os.str();
}

}  // namespace gammaratio
