#include "cli/report.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <ostream>


#include "kbound/error.hpp"

namespace kbound::cli {

using nlohmann::json;

namespace {

std::string shortest(double v) {
  char buf[40];
  const auto r = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, r.ptr);
}

template <class T>
json opt(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

template <class T>
std::optional<T> get_opt(const json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<T>();
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::vector<std::string> cells(const ReportRow& r) {
  auto i64 = [](const std::optional<std::int64_t>& v) { return v ? std::to_string(*v) : std::string(); };
  return {r.graph_id,
          std::to_string(r.n),
          std::to_string(r.m),
          std::to_string(r.k),
          r.method,
          r.quantity,
          r.value ? shortest(*r.value) : "",
          i64(r.integer_bound),
          i64(r.exact),
          r.exact_exhausted ? "1" : "0",
          i64(r.gap),
          r.certificate,
          shortest(r.wall_ms),
          r.status,
          r.message,
          r.label_map};
}

}  // namespace

const std::vector<std::string>& csv_columns() {
  static const std::vector<std::string> cols = {
      "graph_id", "n",        "m",           "k",       "method", "quantity", "value",   "integer_bound",
      "exact",    "exhausted", "gap",        "certificate", "wall_ms", "status", "message", "label_map"};
  return cols;
}

OutputFormat output_format_from_name(const std::string& name) {
  if (name == "table") return OutputFormat::Table;
  if (name == "csv") return OutputFormat::Csv;
  if (name == "json") return OutputFormat::Json;
  throw_input("BAD_OUTPUT_FORMAT", "unknown output format '" + name + "'");
}

BatchSummary summarize(const std::vector<ReportRow>& rows, int graphs) {
  BatchSummary s;
  s.graphs = graphs;
  double total = 0.0;
  for (const auto& r : rows) {
    ++s.rows;
    if (r.status != "ok") ++s.skipped;
    if (!r.gap) continue;
    ++s.compared;
    total += static_cast<double>(*r.gap);
    if (*r.gap == 0) ++s.tight;
    if (*r.gap < 0) ++s.violations;
  }
  s.mean_gap = s.compared ? total / s.compared : 0.0;
  return s;
}

json row_to_json(const ReportRow& r) {
  return json{{"record", "row"},
              {"schema_version", kSchemaVersion},
              {"graph_id", r.graph_id},
              {"n", r.n},
              {"m", r.m},
              {"k", r.k},
              {"method", r.method},
              {"quantity", r.quantity},
              {"value", opt(r.value)},
              {"integer_bound", opt(r.integer_bound)},
              {"exact", opt(r.exact)},
              {"exact_exhausted", r.exact_exhausted},
              {"gap", opt(r.gap)},
              {"certificate", r.certificate},
              {"wall_ms", r.wall_ms},
              {"status", r.status},
              {"message", r.message},
              {"label_map", r.label_map}};
}

ReportRow row_from_json(const json& j) {
  if (j.value("schema_version", 0) != kSchemaVersion)
    throw_input("BAD_SCHEMA", "unsupported report schema version");
  ReportRow r;
  r.graph_id = j.at("graph_id").get<std::string>();
  r.n = j.at("n").get<int>();
  r.m = j.at("m").get<int>();
  r.k = j.at("k").get<int>();
  r.method = j.at("method").get<std::string>();
  r.quantity = j.at("quantity").get<std::string>();
  r.value = get_opt<double>(j, "value");
  r.integer_bound = get_opt<std::int64_t>(j, "integer_bound");
  r.exact = get_opt<std::int64_t>(j, "exact");
  r.exact_exhausted = j.at("exact_exhausted").get<bool>();
  r.gap = get_opt<std::int64_t>(j, "gap");
  r.certificate = j.at("certificate").get<std::string>();
  r.wall_ms = j.at("wall_ms").get<double>();
  r.status = j.at("status").get<std::string>();
  r.message = j.at("message").get<std::string>();
  r.label_map = j.at("label_map").get<std::string>();
  return r;
}

json summary_to_json(const BatchSummary& s) {
  return json{{"record", "summary"}, {"schema_version", kSchemaVersion}, {"graphs", s.graphs},
              {"rows", s.rows},      {"skipped", s.skipped},             {"compared", s.compared},
              {"tight", s.tight},    {"violations", s.violations},       {"mean_gap", s.mean_gap}};
}

std::vector<ReportRow> rows_from_json_text(const std::string& text) {
  std::vector<ReportRow> out;
  for (const auto& j : json::parse(text))
    if (j.value("record", "row") == "row") out.push_back(row_from_json(j));
  return out;
}

void write_report(std::ostream& os, OutputFormat format, const std::vector<ReportRow>& rows,
                  const std::optional<BatchSummary>& summary) {
  switch (format) {
    case OutputFormat::Json: {
      json arr = json::array();
      for (const auto& r : rows) arr.push_back(row_to_json(r));
      if (summary) arr.push_back(summary_to_json(*summary));
      os << arr.dump(2) << '\n';
      return;
    }
    case OutputFormat::Csv: {
      const auto& cols = csv_columns();
      for (std::size_t i = 0; i < cols.size(); ++i) os << (i ? "," : "") << cols[i];
      os << '\n';
      for (const auto& r : rows) {
        const auto c = cells(r);
        for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << csv_field(c[i]);
        os << '\n';
      }
      if (summary)
        os << "# summary graphs=" << summary->graphs << " rows=" << summary->rows << " skipped=" << summary->skipped
           << " compared=" << summary->compared << " tight=" << summary->tight
           << " violations=" << summary->violations << " mean_gap=" << shortest(summary->mean_gap) << '\n';
      return;
    }
    case OutputFormat::Table: {
      const std::vector<std::string> head = {"graph", "n", "m", "k", "method", "quantity", "value",
                                             "bound", "exact", "gap", "status", "certificate"};
      std::vector<std::vector<std::string>> body;
      for (const auto& r : rows) {
        const auto c = cells(r);
        std::string value = r.value ? c[6] : "-";
        if (r.value) {
          char buf[32];
          std::snprintf(buf, sizeof buf, "%.6f", *r.value);
          value = buf;
        }
        std::string exact = c[8].empty() ? "-" : c[8] + (r.exact_exhausted ? "*" : "");
        body.push_back({c[0], c[1], c[2], c[3], c[4], c[5], value, c[7].empty() ? "-" : c[7], exact,
                        c[10].empty() ? "-" : c[10], r.status, c[11]});
      }
      std::vector<std::size_t> w(head.size());
      for (std::size_t i = 0; i < head.size(); ++i) w[i] = head[i].size();
      for (const auto& b : body)
        for (std::size_t i = 0; i < b.size(); ++i) w[i] = std::max(w[i], b[i].size());
      auto line = [&](const std::vector<std::string>& v) {
        for (std::size_t i = 0; i < v.size(); ++i) {
          os << v[i];
          if (i + 1 < v.size()) os << std::string(w[i] - v[i].size() + 2, ' ');
        }
        os << '\n';
      };
      line(head);
      for (const auto& b : body) line(b);
      if (summary)
        os << "\n" << summary->graphs << " graphs, " << summary->rows << " rows, " << summary->skipped
           << " skipped, " << summary->tight << " tight of " << summary->compared << " compared, "
           << summary->violations << " violations, mean gap " << shortest(summary->mean_gap) << '\n';
      return;
    }
  }
}

}  // namespace kbound::cli
