#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cli/polynomial_syntax.hpp"
#include "cli/report.hpp"
#include "kbound/bounds.hpp"
#include "kbound/error.hpp"
#include "kbound/graph_io.hpp"

namespace kbound::cli {

enum ExitCode : int { kExitOk = 0, kExitInput = 2, kExitPrecondition = 3, kExitNumeric = 4 };

int exit_code_for(ErrorKind kind);

enum class Command { Bound, Exact, Compare, Batch };

struct RunConfig {
  Command command = Command::Bound;
  /// File path, "-" for stdin, or "named:<name>" (petersen, c6, k1,3, q3 ...).
  std::string input;
  std::optional<GraphFormat> format;
  bool remap_labels = false;
  int k = 1;
  std::vector<std::string> methods;
  std::optional<std::string> polynomial;
  std::map<char, double> params;
  std::int64_t field = 2;
  std::string diag = "1";
  std::string minrank_poly = "x";
  Tolerances tolerances;
  OutputFormat output = OutputFormat::Table;
  std::string out_path;
  int threads = 0;  // 0: hardware concurrency
  std::int64_t budget = 50'000'000;
  bool with_chi = false;
  bool diameter_shortcut = true;
};

const std::vector<std::string>& known_methods();
std::vector<std::string> default_methods();

/// Parse the KBOUND_TOL syntax "psd=1e-9,cluster=1e-6,..." on top of `base`.
/// Keys are the Tolerances field names. Throws Input BAD_TOLERANCE.
Tolerances parse_tolerances(std::string_view text, Tolerances base = {});

/// Validate a config; throws Input errors.
void validate(const RunConfig& cfg);

/// Rows for one graph. Failures of individual methods become rows with a
/// non-"ok" status; `worst` receives the most severe error kind seen.
std::vector<ReportRow> evaluate_graph(const Graph& g, const std::string& id, const RunConfig& cfg,
                                      std::optional<ErrorKind>& worst);

/// Execute a validated config. Returns the process exit code.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Full command line entry point: argument parsing, KBOUND_TOL, run().
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace kbound::cli
