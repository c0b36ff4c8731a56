#include "cli/run.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <limits>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "kbound/error.hpp"
#include "kbound/exact.hpp"
#include "kbound/named_graphs.hpp"

namespace kbound::cli {

using nlohmann::json;

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Input: return kExitInput;
    case ErrorKind::Precondition: return kExitPrecondition;
    case ErrorKind::Numeric: return kExitNumeric;
  }
  return kExitNumeric;
}

const std::vector<std::string>& known_methods() {
  static const std::vector<std::string> m = {"chik",  "chikprime", "eigenpoly", "framework", "laplacian", "minor",
                                             "minrank", "optlp",   "ratio",     "theta",     "walkratio"};
  return m;
}

std::vector<std::string> default_methods() { return {"laplacian", "optlp"}; }

Tolerances parse_tolerances(std::string_view text, Tolerances t) {
  const std::pair<const char*, double Tolerances::*> fields[] = {
      {"psd", &Tolerances::psd},
      {"cluster", &Tolerances::cluster},
      {"floor", &Tolerances::floor},
      {"rank_cutoff", &Tolerances::rank_cutoff},
      {"range", &Tolerances::range},
      {"total_nonzero", &Tolerances::total_nonzero},
      {"walk_regular", &Tolerances::walk_regular},
      {"certificate", &Tolerances::certificate},
  };
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = std::min(text.find(',', start), text.size());
    const std::string item(text.substr(start, comma - start));
    start = comma + 1;
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw_input("BAD_TOLERANCE", "expected key=value in KBOUND_TOL, got '" + item + "'");
    const std::string key = item.substr(0, eq);
    char* end = nullptr;
    const double v = std::strtod(item.c_str() + eq + 1, &end);
    if (end == item.c_str() + eq + 1 || *end != '\0' || !(v >= 0.0) || !std::isfinite(v))
      throw_input("BAD_TOLERANCE", "bad value for '" + key + "'");
    bool found = false;
    for (const auto& [name, member] : fields)
      if (key == name) {
        t.*member = v;
        found = true;
      }
    if (!found) throw_input("BAD_TOLERANCE", "unknown tolerance '" + key + "'");
  }
  return t;
}

void validate(const RunConfig& cfg) {
  if (cfg.k < 1) throw_input("BAD_K", "--k must be >= 1");
  if (cfg.input.empty()) throw_input("MISSING_INPUT", "no graph given");
  if (cfg.command != Command::Exact && cfg.methods.empty()) throw_input("NO_METHODS", "--methods is empty");
  for (const auto& m : cfg.methods)
    if (std::find(known_methods().begin(), known_methods().end(), m) == known_methods().end())
      throw_input("UNKNOWN_METHOD", "unknown method '" + m + "'");
  if (cfg.polynomial) (void)parse_polynomial(*cfg.polynomial, cfg.params);
  if (cfg.budget < 1) throw_input("BAD_BUDGET", "--budget must be positive");
  if (cfg.threads < 0) throw_input("BAD_THREADS", "--threads must be >= 0");
}

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

std::string join_vertices(const std::vector<Vertex>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "}";
}

std::string describe_classes(const ColoringPartition& p) {
  std::string s;
  for (std::size_t i = 0; i < p.classes.size(); ++i) s += (i ? "|" : "") + join_vertices(p.classes[i]);
  return s;
}

std::string describe_certificate(const Certificate& c) {
  if (const auto* p = std::get_if<Polynomial>(&c)) return "p=" + format_polynomial(*p);
  if (const auto* ps = std::get_if<std::vector<Polynomial>>(&c)) {
    std::string s = "components:";
    for (std::size_t i = 0; i < ps->size(); ++i) s += (i ? ";" : "") + format_polynomial((*ps)[i]);
    return s;
  }
  return "";
}

struct Spectrum {
  SymMatrix A;
  EigenvalueProfile profile;
};

Spectrum spectrum_of(const Graph& g, const Tolerances& tol) {
  Spectrum s;
  s.A = adjacency_matrix(g);
  s.profile = cluster_spectrum(eigendecompose(s.A), tol.cluster);
  return s;
}

PolySpec method_polynomial(const RunConfig& cfg) {
  if (cfg.polynomial) return parse_polynomial(*cfg.polynomial, cfg.params);
  return PolynomialPreset::Shifted;
}

std::vector<std::int64_t> integer_coefficients(const Polynomial& p) {
  std::vector<std::int64_t> out;
  for (double c : p.coeffs()) {
    if (c != std::round(c) || std::abs(c) > 1e15)
      throw_input("BAD_POLYNOMIAL", "min-rank polynomial needs integer coefficients");
    out.push_back(static_cast<std::int64_t>(c));
  }
  return out;
}

std::vector<std::int64_t> parse_diag(const std::string& text, int n) {
  std::vector<std::int64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    char* end = nullptr;
    const long long v = std::strtoll(item.c_str(), &end, 10);
    if (item.empty() || *end != '\0') throw_input("BAD_DIAG", "bad --diag entry '" + item + "'");
    out.push_back(v);
  }
  if (out.size() == 1) out.assign(n, out[0]);
  if (static_cast<int>(out.size()) != n)
    throw_input("BAD_DIAG", "--diag needs one value or exactly n = " + std::to_string(n) + " values");
  return out;
}

std::string quantity_of(const std::string& method) {
  if (method == "chik") return "chi_k_lower";
  if (method == "chikprime") return "chi_k_prime_lower";
  if (method == "walkratio") return "theta_prime_lower";
  if (method == "theta") return "theta_lower";
  return "alpha_k_upper";
}

void fill_bound(ReportRow& row, const BoundReport& r) {
  row.value = r.value;
  row.integer_bound = r.integer_bound;
  row.certificate = describe_certificate(r.certificate);
}

ReportRow run_method(const std::string& method, const Graph& g, const RunConfig& cfg) {
  const Tolerances& tol = cfg.tolerances;
  const int k = cfg.k;
  ReportRow row;
  row.method = method;
  row.quantity = quantity_of(method);

  if (method == "optlp") {
    const auto r = optimal_polynomial_bound(g, k, tol, {.diameter_shortcut = cfg.diameter_shortcut});
    fill_bound(row, r);
    if (r.method == "diameter") row.certificate = "diameter-shortcut";
  } else if (method == "laplacian") {
    fill_bound(row, laplacian_kpower_bound(g, k, tol));
    row.certificate = "sorted-diagonal scan of L^" + std::to_string(k);
  } else if (method == "minor") {
    fill_bound(row, minor_polynomial_bound(g, k, tol));
  } else if (method == "minrank") {
    const auto diag = parse_diag(cfg.diag, g.order());
    const PolySpec spec = parse_polynomial(cfg.minrank_poly, cfg.params);
    const auto* p = std::get_if<Polynomial>(&spec);
    if (!p) throw_input("BAD_POLYNOMIAL", "min-rank polynomial cannot be a preset");
    const auto coeffs = integer_coefficients(*p);
    const auto rank = min_rank_bound(g, k, cfg.field, diag, coeffs);
    row.value = static_cast<double>(rank);
    row.integer_bound = rank;
    row.certificate = "GF(" + std::to_string(cfg.field) + ") diag=" + cfg.diag + " p=" + format_polynomial(*p);
  } else if (method == "walkratio") {
    const auto r = walk_ratio_bound(g, k);
    row.value = r.value;
    row.certificate = "w_" + std::to_string(2 * k) + "/c_" + std::to_string(2 * k) + "; " + r.graph_description;
  } else if (method == "chikprime") {
    const Graph lg = line_graph(g);
    const Polynomial p = resolve(method_polynomial(cfg), k, spectrum_of(lg, tol).profile);
    const auto r = chi_k_prime_lower_bound(g, k, p, tol);
    row.value = r.value;
    row.integer_bound = r.integer_bound;
    row.certificate = "p=" + format_polynomial(p) + " on L(G)";
  } else {
    if (g.order() == 0) throw_precondition("EMPTY_GRAPH", "graph has no vertices");
    const Spectrum s = spectrum_of(g, tol);
    const Polynomial p = resolve(method_polynomial(cfg), k, s.profile);
    if (method == "ratio") {
      fill_bound(row, ratio_type_bound(g, k, p, tol));
    } else if (method == "eigenpoly") {
      if (p.degree() > k) throw_precondition("DEGREE_EXCEEDS_K", "polynomial degree exceeds k");
      fill_bound(row, eigenvector_polynomial_bound(g, s.A, 0, p, tol));
    } else if (method == "framework") {
      const auto& d = s.profile.distinct;
      if (d.size() < 2) throw_precondition("SINGLE_EIGENVALUE", "spectrum has one distinct eigenvalue");
      double low = std::numeric_limits<double>::infinity();
      for (std::size_t j = 1; j < d.size(); ++j) low = std::min(low, p(d[j].value));
      std::vector<double> x(g.order(), 1.0);
      std::string xname = "ones";
      if (!g.is_regular()) {
        if (!g.is_connected())
          throw_precondition("DISCONNECTED", "framework pair for a non-regular graph needs connectivity");
        x = principal_eigenpair(g).y;
        xname = "perron";
      }
      const SymMatrix M = matrix_polynomial(s.A, p) - SymMatrix::identity(g.order()) * low;
      const auto pair = make_matrix_vector_pair(g, M, x, k, tol);
      fill_bound(row, framework_bound(g, pair, tol));
      row.certificate = "M=p(A)-" + format_polynomial(Polynomial::constant(low)) + "I p=" + format_polynomial(p) +
                        " x=" + xname;
    } else if (method == "theta") {
      const auto r = theta_lower_bound(g, k, p, tol);
      row.quantity = r.target == ThetaTarget::ThetaPrime ? "theta_prime_lower" : "theta_lower";
      row.value = r.value;
      row.certificate = "p=" + format_polynomial(p) + "; " + r.graph_description;
    } else if (method == "chik") {
      const auto r = chi_k_lower_bound(g, k, p, tol);
      row.value = r.value;
      row.integer_bound = r.integer_bound;
      row.certificate = "p=" + format_polynomial(p);
    } else {
      throw_input("UNKNOWN_METHOD", "unknown method '" + method + "'");
    }
  }
  return row;
}

void note_error(std::optional<ErrorKind>& worst, ErrorKind kind) {
  if (!worst || exit_code_for(kind) > exit_code_for(*worst)) worst = kind;
}

template <class F>
void guarded(ReportRow& row, std::optional<ErrorKind>& worst, F&& f) {
  try {
    f();
  } catch (const Error& e) {
    row.status = e.code();
    row.message = e.what();
    note_error(worst, e.kind());
  } catch (const std::exception& e) {
    row.status = "INTERNAL";
    row.message = e.what();
    note_error(worst, ErrorKind::Numeric);
  }
}

ReportRow exact_row(const Graph& g, const RunConfig& cfg, ExactQuantity q, std::optional<ErrorKind>& worst,
                    std::optional<ExactResult>& result) {
  ReportRow row;
  row.method = "exact";
  row.quantity = q == ExactQuantity::AlphaK ? "alpha_k" : "chi_k";
  const auto t0 = Clock::now();
  guarded(row, worst, [&] {
    ExactResult r;
    if (q == ExactQuantity::AlphaK) {
      r = exact_alpha_k(g, cfg.k, {.budget = cfg.budget, .max_vertices = 64});
      row.certificate = "witness=" + join_vertices(r.witness_set);
    } else {
      r = exact_chi_k(g, cfg.k, {.budget = cfg.budget, .max_vertices = 32});
      row.certificate = "classes=" + describe_classes(r.witness_coloring);
    }
    row.value = r.value;
    row.integer_bound = r.value;
    row.exact = r.value;
    row.exact_exhausted = r.exhausted;
    if (r.exhausted) row.message = "node budget exhausted; value is the best found, not exact";
    result = r;
  });
  row.wall_ms = ms_since(t0);
  return row;
}

std::vector<std::string> sorted_methods(std::vector<std::string> m) {
  std::sort(m.begin(), m.end());
  m.erase(std::unique(m.begin(), m.end()), m.end());
  return m;
}

}  // namespace

std::vector<ReportRow> evaluate_graph(const Graph& g, const std::string& id, const RunConfig& cfg,
                                      std::optional<ErrorKind>& worst) {
  std::vector<ReportRow> rows;
  const auto methods = sorted_methods(cfg.methods);
  const bool want_exact = cfg.command != Command::Bound;
  const bool want_alpha = cfg.command == Command::Exact || methods.empty() ||
                          std::any_of(methods.begin(), methods.end(), [](const std::string& m) {
                            return m != "chik" && m != "chikprime";
                          });
  const bool want_chi = cfg.with_chi || std::find(methods.begin(), methods.end(), "chik") != methods.end();

  std::optional<ExactResult> alpha, chi, chi_line;
  if (want_exact) {
    if (want_alpha) rows.push_back(exact_row(g, cfg, ExactQuantity::AlphaK, worst, alpha));
    if (want_chi) rows.push_back(exact_row(g, cfg, ExactQuantity::ChiK, worst, chi));
  }
  if (cfg.command != Command::Exact) {
    for (const auto& m : methods) {
      ReportRow row;
      row.method = m;
      row.quantity = quantity_of(m);
      const auto t0 = Clock::now();
      guarded(row, worst, [&] { row = run_method(m, g, cfg); });
      row.wall_ms = ms_since(t0);
      if (want_exact && row.status == "ok" && row.integer_bound) {
        std::optional<ExactResult>* ref = nullptr;
        if (row.quantity == "alpha_k_upper") ref = &alpha;
        else if (row.quantity == "chi_k_lower") ref = &chi;
        else if (row.quantity == "chi_k_prime_lower") {
          if (!chi_line && g.size() > 0 && g.size() <= 32) {
            try {
              chi_line = exact_chi_k(line_graph(g), cfg.k, {.budget = cfg.budget, .max_vertices = 32});
            } catch (const Error&) {
            }
          }
          ref = &chi_line;
        }
        if (ref && *ref) {
          row.exact = (*ref)->value;
          row.exact_exhausted = (*ref)->exhausted;
          if (!(*ref)->exhausted)
            row.gap = row.quantity == "alpha_k_upper" ? *row.integer_bound - (*ref)->value
                                                      : (*ref)->value - *row.integer_bound;
        }
      }
      rows.push_back(std::move(row));
    }
  }
  for (auto& r : rows) {
    r.graph_id = id;
    r.n = g.order();
    r.m = g.size();
    r.k = cfg.k;
  }
  return rows;
}

namespace {

std::string read_all(std::istream& in) {
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

struct Source {
  std::string id;
  std::string text;
  GraphFormat format = GraphFormat::EdgeList;
  std::optional<Graph> named;
};

Source open_source(const RunConfig& cfg) {
  Source s;
  if (cfg.input.rfind("named:", 0) == 0) {
    s.id = cfg.input.substr(6);
    s.named = graphs::by_name(s.id);
    return s;
  }
  if (cfg.input == "-") {
    s.id = "stdin";
    s.text = read_all(std::cin);
    s.format = cfg.format.value_or(GraphFormat::Graph6);
    return s;
  }
  std::ifstream f(cfg.input, std::ios::binary);
  if (!f) throw_input("CANNOT_OPEN", "cannot open '" + cfg.input + "'");
  s.text = read_all(f);
  s.format = cfg.format.value_or(format_from_extension(cfg.input));
  std::string stem = cfg.input;
  if (const auto slash = stem.find_last_of('/'); slash != std::string::npos) stem = stem.substr(slash + 1);
  if (const auto dot = stem.find_last_of('.'); dot != std::string::npos && dot > 0) stem = stem.substr(0, dot);
  s.id = stem;
  return s;
}

std::string label_map_of(const ParsedGraph& pg) {
  if (!pg.remapped) return "";
  std::string s;
  for (std::size_t v = 0; v < pg.labels.size(); ++v) {
    if (pg.labels[v] < 0) continue;
    s += (s.empty() ? "" : ",") + std::to_string(v) + ":" + std::to_string(pg.labels[v]);
  }
  return s;
}

void write_error_record(std::ostream& err, const Error& e) {
  json j{{"record", "error"},
         {"kind", std::string(to_string(e.kind()))},
         {"code", e.code()},
         {"message", e.what()},
         {"exit_code", exit_code_for(e.kind())}};
  if (e.offset()) j["offset"] = *e.offset();
  err << j.dump() << '\n';
}

struct LoadedGraph {
  std::string id;
  Graph graph;
  std::string label_map;
};

// One graph per non-blank line; stops at the first malformed line and
// reports the error with an offset into the whole file.
std::vector<LoadedGraph> load_corpus(const Source& src, std::optional<Error>& failure) {
  std::vector<LoadedGraph> out;
  std::size_t pos = 0;
  int index = 0;
  const std::string_view text = src.text;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    const std::size_t line_start = pos;
    pos = end + 1;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    constexpr std::string_view header = ">>graph6<<";
    std::size_t skip = 0;
    if (line.substr(0, header.size()) == header) skip = header.size();
    line.remove_prefix(skip);
    if (line.find_first_not_of(" \t") == std::string_view::npos) continue;
    ++index;
    try {
      out.push_back({src.id + "#" + std::to_string(index), parse_graph(line, GraphFormat::Graph6).graph, ""});
    } catch (const Error& e) {
      failure = Error(e.kind(), e.code(), std::string("line ") + std::to_string(index) + ": " + e.what(),
                      line_start + skip + e.offset().value_or(0));
      break;
    }
  }
  return out;
}

}  // namespace

int run(const RunConfig& cfg, std::ostream& out_default, std::ostream& err) {
  std::ofstream file;
  std::ostream* out = &out_default;
  // Output destination is opened before any work so a bad path fails fast.
  if (!cfg.out_path.empty()) {
    file.open(cfg.out_path);
    if (!file) {
      write_error_record(err, Error(ErrorKind::Input, "CANNOT_OPEN", "cannot open '" + cfg.out_path + "'"));
      return kExitInput;
    }
    out = &file;
  }

  std::vector<LoadedGraph> graphs;
  std::optional<Error> failure;
  try {
    validate(cfg);
    const Source src = open_source(cfg);
    ParseOptions popt;
    popt.remap_labels = cfg.remap_labels;
    if (src.named) {
      graphs.push_back({src.id, *src.named, ""});
    } else if (cfg.command == Command::Batch && src.format == GraphFormat::Graph6) {
      graphs = load_corpus(src, failure);
    } else {
      const auto pg = parse_graph(src.text, src.format, popt);
      graphs.push_back({src.id, pg.graph, label_map_of(pg)});
    }
  } catch (const Error& e) {
    write_error_record(err, e);
    return exit_code_for(e.kind());
  }
  for (const auto& lg : graphs)
    if (lg.graph.order() == 0) {
      write_error_record(err, Error(ErrorKind::Input, "EMPTY_GRAPH", lg.id + " has no vertices"));
      return kExitInput;
    }

  std::vector<std::vector<ReportRow>> results(graphs.size());
  std::vector<std::optional<ErrorKind>> worst(graphs.size());
  if (cfg.command == Command::Batch && graphs.size() > 1) {
    unsigned workers = cfg.threads > 0 ? static_cast<unsigned>(cfg.threads) : std::thread::hardware_concurrency();
    workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(graphs.size())));
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        for (std::size_t i; (i = next.fetch_add(1)) < graphs.size();)
          results[i] = evaluate_graph(graphs[i].graph, graphs[i].id, cfg, worst[i]);
      });
    for (auto& t : pool) t.join();
  } else {
    for (std::size_t i = 0; i < graphs.size(); ++i)
      results[i] = evaluate_graph(graphs[i].graph, graphs[i].id, cfg, worst[i]);
  }

  std::vector<ReportRow> rows;
  for (std::size_t i = 0; i < graphs.size(); ++i)
    for (auto& r : results[i]) {
      r.label_map = graphs[i].label_map;
      rows.push_back(std::move(r));
    }

  std::optional<BatchSummary> summary;
  if (cfg.command == Command::Batch) summary = summarize(rows, static_cast<int>(graphs.size()));
  write_report(*out, cfg.output, rows, summary);
  out->flush();

  if (failure) {
    write_error_record(err, *failure);
    return exit_code_for(failure->kind());
  }
  int code = kExitOk;
  for (const auto& w : worst) {
    if (!w) continue;
    // Batch mode skips inapplicable methods; only solver failures fail the run.
    if (cfg.command == Command::Batch && *w != ErrorKind::Numeric) continue;
    code = std::max(code, exit_code_for(*w));
  }
  for (const auto& r : rows)
    if (r.status != "ok" && cfg.command != Command::Batch)
      err << r.graph_id << ": " << r.method << ": " << r.status << ": " << r.message << '\n';
  return code;
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spectral upper bounds on the k-independence number, checked against exact search"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string methods, format, output = "table";
  std::vector<std::string> params;

  auto common = [&](CLI::App* sub, bool with_methods) {
    sub->add_option("graph", cfg.input, "graph file, '-' for stdin, or named:<name>")->required();
    sub->add_option("--k", cfg.k, "distance radius k >= 1")->capture_default_str();
    sub->add_option("--format", format, "graph6 | edge-list | dimacs (default: from extension)");
    sub->add_flag("--remap", cfg.remap_labels, "edge-list: map sparse labels onto 0..n-1");
    sub->add_option("--output-format", output, "table | csv | json")->capture_default_str();
    sub->add_option("--out", cfg.out_path, "write the report here instead of stdout");
    sub->add_option("--budget", cfg.budget, "node budget for exact search")->capture_default_str();
    if (!with_methods) return;
    sub->add_option("--methods", methods, "comma-separated: framework,eigenpoly,optlp,ratio,minor,laplacian,"
                                          "minrank,theta,walkratio,chik,chikprime");
    sub->add_option("--poly", cfg.polynomial, "preset (power, power-plus, shifted, chebyshev), x2+x, or c0,c1,..");
    sub->add_option("--param", params, "bind a polynomial parameter, e.g. a=2");
    sub->add_option("--field", cfg.field, "minrank: prime field characteristic")->capture_default_str();
    sub->add_option("--diag", cfg.diag, "minrank: diagonal, one value or n comma-separated")->capture_default_str();
    sub->add_option("--minrank-poly", cfg.minrank_poly, "minrank: integer polynomial")->capture_default_str();
    sub->add_flag("!--no-diameter-shortcut", cfg.diameter_shortcut, "optlp: solve the LP even when k >= diameter");
  };

  auto* bound = app.add_subcommand("bound", "compute bounds");
  common(bound, true);
  auto* exact = app.add_subcommand("exact", "exact alpha_k (and chi_k with --chi)");
  common(exact, false);
  exact->add_flag("--chi", cfg.with_chi, "also compute chi_k");
  auto* compare = app.add_subcommand("compare", "bounds next to exact values");
  common(compare, true);
  auto* batch = app.add_subcommand("batch", "compare over a multi-line graph6 corpus");
  common(batch, true);
  batch->add_option("--threads", cfg.threads, "worker threads (0: all cores)")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    if (!app.get_subcommands().empty()) err << app.get_subcommands().front()->help();
    return kExitInput;
  }

  try {
    if (bound->parsed()) cfg.command = Command::Bound;
    else if (exact->parsed()) cfg.command = Command::Exact;
    else if (compare->parsed()) cfg.command = Command::Compare;
    else cfg.command = Command::Batch;

    if (!format.empty()) cfg.format = format_from_name(format);
    cfg.output = output_format_from_name(output);
    for (const auto& p : params) cfg.params.insert(parse_parameter(p));
    if (cfg.command != Command::Exact) {
      if (methods.empty()) {
        cfg.methods = default_methods();
      } else {
        std::stringstream ss(methods);
        for (std::string m; std::getline(ss, m, ',');)
          if (!m.empty()) cfg.methods.push_back(m);
      }
    }
    if (const char* env = std::getenv("KBOUND_TOL")) cfg.tolerances = parse_tolerances(env);
    validate(cfg);
  } catch (const Error& e) {
    write_error_record(err, e);
    return exit_code_for(e.kind());
  }
  return run(cfg, out, err);
}

}  // namespace kbound::cli
