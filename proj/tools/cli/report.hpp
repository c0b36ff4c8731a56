#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace kbound::cli {

inline constexpr int kSchemaVersion = 1;

/// One line of output. `quantity` says what `value` bounds or equals:
/// alpha_k_upper, chi_k_lower, chi_k_prime_lower, theta_lower, alpha_k, chi_k.
struct ReportRow {
  std::string graph_id;
  int n = 0;
  int m = 0;
  int k = 1;
  std::string method;
  std::string quantity;
  std::optional<double> value;
  std::optional<std::int64_t> integer_bound;
  std::optional<std::int64_t> exact;
  bool exact_exhausted = false;
  /// bound - exact for upper bounds, exact - bound for lower bounds.
  std::optional<std::int64_t> gap;
  std::string certificate;
  double wall_ms = 0.0;
  std::string status = "ok";
  std::string message;
  std::string label_map;

  friend bool operator==(const ReportRow&, const ReportRow&) = default;
};

struct BatchSummary {
  int graphs = 0;
  int rows = 0;
  int skipped = 0;
  int compared = 0;  // rows with a gap
  int tight = 0;     // gap == 0
  int violations = 0;
  double mean_gap = 0.0;
};

BatchSummary summarize(const std::vector<ReportRow>& rows, int graphs);

enum class OutputFormat { Table, Csv, Json };
OutputFormat output_format_from_name(const std::string& name);

nlohmann::json row_to_json(const ReportRow& row);
ReportRow row_from_json(const nlohmann::json& j);
nlohmann::json summary_to_json(const BatchSummary& s);

/// Rows from a JSON report; summary records are skipped.
std::vector<ReportRow> rows_from_json_text(const std::string& text);

/// Writes the complete report. For JSON the array closes after the summary.
void write_report(std::ostream& os, OutputFormat format, const std::vector<ReportRow>& rows,
                  const std::optional<BatchSummary>& summary);

/// Fixed CSV column order.
const std::vector<std::string>& csv_columns();

}  // namespace kbound::cli
