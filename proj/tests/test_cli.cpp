#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli/polynomial_syntax.hpp"
#include "cli/report.hpp"
#include "cli/run.hpp"
#include "doctest.h"
#include "kbound/error.hpp"
#include "kbound/graph_io.hpp"
#include "kbound/named_graphs.hpp"
#include "support/corpus.hpp"

using namespace kbound;
using namespace kbound::cli;

namespace {

struct Invocation {
  int code;
  std::string out;
  std::string err;
};

Invocation invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "kbound");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name, const std::string& content) {
  const auto dir = std::filesystem::temp_directory_path() / "kbound_test_cli";
  std::filesystem::create_directories(dir);
  const auto p = dir / name;
  std::ofstream(p) << content;
  return p;
}

Polynomial poly(std::string_view s, const std::map<char, double>& params = {}) {
  return std::get<Polynomial>(parse_polynomial(s, params));
}

}  // namespace

TEST_SUITE("polynomial syntax") {
  TEST_CASE("expressions") {
    CHECK(poly("x") == Polynomial({0.0, 1.0}));
    CHECK(poly("x2") == Polynomial({0.0, 0.0, 1.0}));
    CHECK(poly("x2+x") == Polynomial({0.0, 1.0, 1.0}));
    CHECK(poly("x^2 + x - 2") == Polynomial({-2.0, 1.0, 1.0}));
    CHECK(poly("-0.5x3+2") == Polynomial({2.0, 0.0, 0.0, -0.5}));
    CHECK(poly("x3+ax2+bx", {{'a', 2.0}, {'b', -1.0}}) == Polynomial({0.0, -1.0, 2.0, 1.0}));
    CHECK(poly("3*x") == Polynomial({0.0, 3.0}));
    CHECK(poly("x+x") == Polynomial({0.0, 2.0}));
  }

  TEST_CASE("raw coefficients and presets") {
    CHECK(poly("0,1,1") == Polynomial({0.0, 1.0, 1.0}));
    CHECK(poly("-2, 1, 1") == Polynomial({-2.0, 1.0, 1.0}));
    CHECK(std::get<PolynomialPreset>(parse_polynomial("chebyshev")) == PolynomialPreset::Chebyshev);
    CHECK(std::get<PolynomialPreset>(parse_polynomial("power-plus")) == PolynomialPreset::PowerPlus);
  }

  TEST_CASE("errors") {
    CHECK_THROWS_AS(parse_polynomial("x2+"), Error);
    CHECK_THROWS_AS(parse_polynomial("x^"), Error);
    CHECK_THROWS_AS(parse_polynomial("2x)"), Error);
    CHECK_THROWS_AS(parse_polynomial("ax"), Error);
    CHECK_THROWS_AS(parse_polynomial("1,,2"), Error);
    CHECK_THROWS_AS(parse_parameter("x=1"), Error);
    CHECK_THROWS_AS(parse_parameter("a=one"), Error);
    CHECK(parse_parameter("b=-2.5") == std::pair<char, double>{'b', -2.5});
  }

  TEST_CASE("formatting round-trips") {
    for (const auto& p : {Polynomial({-2.0, 1.0, 1.0}), Polynomial({0.1, -0.3, 0.0, 7.25}), Polynomial({5.0}),
                          Polynomial({0.0, 1.0})}) {
      CHECK(poly(format_polynomial(p)).coeffs() == p.coeffs());
    }
    CHECK(format_polynomial(Polynomial({0.0, 1.0, 1.0})) == "x2+x");
  }
}

TEST_SUITE("report") {
  TEST_CASE("json round trip reproduces every field") {
    ReportRow r;
    r.graph_id = "g,1 \"q\"";
    r.n = 7;
    r.m = 9;
    r.k = 2;
    r.method = "optlp";
    r.quantity = "alpha_k_upper";
    r.value = 2.0000000000000004;
    r.integer_bound = 2;
    r.exact = 2;
    r.gap = 0;
    r.certificate = "p=0.1x2+0.30000000000000004";
    r.wall_ms = 0.123456789;
    r.label_map = "0:10,1:20";
    ReportRow blank;
    blank.method = "ratio";
    blank.status = "NOT_REGULAR";
    blank.message = "bound requires a regular graph";
    std::ostringstream os;
    write_report(os, OutputFormat::Json, {r, blank}, summarize({r, blank}, 1));
    const auto back = rows_from_json_text(os.str());
    REQUIRE(back.size() == 2);
    CHECK(back[0] == r);
    CHECK(back[1] == blank);
  }

  TEST_CASE("csv header is fixed and fields are quoted") {
    ReportRow r;
    r.graph_id = "a,b";
    std::ostringstream os;
    write_report(os, OutputFormat::Csv, {r}, std::nullopt);
    const std::string s = os.str();
    CHECK(s.rfind("graph_id,n,m,k,method,quantity,value,integer_bound,exact,exhausted,gap,certificate,wall_ms,"
                  "status,message,label_map\n",
                  0) == 0);
    CHECK(s.find("\"a,b\"") != std::string::npos);
  }

  TEST_CASE("summary") {
    std::vector<ReportRow> rows(3);
    rows[0].gap = 0;
    rows[1].gap = 2;
    rows[2].status = "NOT_REGULAR";
    const auto s = summarize(rows, 1);
    CHECK(s.compared == 2);
    CHECK(s.tight == 1);
    CHECK(s.skipped == 1);
    CHECK(s.mean_gap == 1.0);
    CHECK(s.violations == 0);
  }
}

TEST_SUITE("tolerances") {
  TEST_CASE("KBOUND_TOL syntax") {
    const auto t = parse_tolerances("psd=1e-7,floor=0");
    CHECK(t.psd == 1e-7);
    CHECK(t.floor == 0.0);
    CHECK(t.cluster == Tolerances{}.cluster);
    CHECK_THROWS_AS(parse_tolerances("speed=1"), Error);
    CHECK_THROWS_AS(parse_tolerances("psd"), Error);
    CHECK_THROWS_AS(parse_tolerances("psd=-1"), Error);
  }
}

TEST_SUITE("run") {
  TEST_CASE("compare on Petersen k=2") {
    const auto p = temp_file("petersen.g6", emit_graph6(graphs::petersen()) + "\n");
    const auto r = invoke({"compare", p.string(), "--k", "2", "--methods", "optlp,ratio", "--poly", "x2+x",
                           "--output-format", "json"});
    REQUIRE(r.code == 0);
    const auto rows = rows_from_json_text(r.out);
    REQUIRE(rows.size() == 3);
    CHECK(rows[0].method == "exact");
    CHECK(rows[0].exact == 1);
    for (int i = 1; i <= 2; ++i) {
      CHECK(rows[i].integer_bound == 1);
      CHECK(rows[i].exact == 1);
      CHECK(rows[i].gap == 0);
    }
    CHECK(rows[1].method == "optlp");
    CHECK(rows[2].method == "ratio");
  }

  TEST_CASE("bound ratio on K2 and exact on C6") {
    const auto k2 = temp_file("k2.el", "2\n0 1\n");
    const auto r = invoke({"bound", k2.string(), "--k", "1", "--methods", "ratio", "--poly", "x", "--output-format",
                           "json"});
    REQUIRE(r.code == 0);
    const auto rows = rows_from_json_text(r.out);
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].integer_bound == 1);

    const auto c6 = temp_file("c6.el", "6\n0 1\n1 2\n2 3\n3 4\n4 5\n5 0\n");
    const auto e = invoke({"exact", c6.string(), "--k", "2", "--output-format", "json"});
    REQUIRE(e.code == 0);
    const auto er = rows_from_json_text(e.out);
    REQUIRE(er.size() == 1);
    CHECK(er[0].quantity == "alpha_k");
    CHECK(er[0].value == 2.0);
    CHECK(er[0].certificate.rfind("witness={", 0) == 0);
  }

  TEST_CASE("exit codes") {
    const auto bad = temp_file("bad.el", "3\n0 1\n2\n");
    const auto in = invoke({"bound", bad.string()});
    CHECK(in.code == kExitInput);
    CHECK(in.err.find("\"ODD_TOKEN_COUNT\"") != std::string::npos);
    CHECK(in.err.find("\"offset\":6") != std::string::npos);

    const auto pre = invoke({"bound", "named:p4", "--methods", "ratio"});
    CHECK(pre.code == kExitPrecondition);
    CHECK(pre.out.find("NOT_REGULAR") != std::string::npos);

    CHECK(invoke({"bound", "named:p4", "--methods", "warp"}).code == kExitInput);
    CHECK(invoke({"bound", "named:p4", "--k", "0"}).code == kExitInput);
    CHECK(invoke({"bound"}).code == kExitInput);
    CHECK(invoke({"bound", "/nonexistent/graph.el"}).code == kExitInput);
    CHECK(invoke({"--help"}).code == kExitOk);
  }

  TEST_CASE("KBOUND_TOL is read from the environment") {
    setenv("KBOUND_TOL", "bogus=1", 1);
    CHECK(invoke({"bound", "named:petersen"}).code == kExitInput);
    setenv("KBOUND_TOL", "floor=1e-9", 1);
    CHECK(invoke({"bound", "named:petersen"}).code == kExitOk);
    unsetenv("KBOUND_TOL");
  }

  TEST_CASE("label remapping is recorded") {
    const auto f = temp_file("sparse.el", "3\n10 20\n20 35\n");
    const auto r = invoke({"bound", f.string(), "--remap", "--methods", "laplacian", "--output-format", "json"});
    REQUIRE(r.code == 0);
    const auto rows = rows_from_json_text(r.out);
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].label_map == "0:10,1:20,2:35");
    CHECK(invoke({"bound", f.string(), "--methods", "laplacian"}).code == kExitInput);
  }

  TEST_CASE("batch keeps input order, skips preconditions, flushes before a parse error") {
    std::string corpus = ">>graph6<<\n";
    for (const Graph& g : {graphs::petersen(), graphs::path(4), graphs::cycle(6)}) corpus += emit_graph6(g) + "\n";
    const auto good = temp_file("corpus.g6", corpus);
    const auto r = invoke({"batch", good.string(), "--k", "1", "--methods", "ratio,optlp", "--threads", "3",
                           "--output-format", "json"});
    CHECK(r.code == kExitOk);
    const auto rows = rows_from_json_text(r.out);
    REQUIRE(rows.size() == 9);
    CHECK(rows[0].graph_id == "corpus#1");
    CHECK(rows[3].graph_id == "corpus#2");
    CHECK(rows[5].status == "NOT_REGULAR");
    CHECK(rows[6].graph_id == "corpus#3");
    CHECK(r.out.find("\"record\": \"summary\"") != std::string::npos);

    const auto broken = temp_file("broken.g6", emit_graph6(graphs::petersen()) + "\nD?\n" + emit_graph6(graphs::cycle(5)) + "\n");
    const auto b = invoke({"batch", broken.string(), "--methods", "optlp", "--output-format", "json"});
    CHECK(b.code == kExitInput);
    const auto partial = rows_from_json_text(b.out);
    REQUIRE(partial.size() == 2);
    CHECK(partial[0].graph_id == "broken#1");
    CHECK(b.err.find("BAD_GRAPH6_LENGTH") != std::string::npos);
  }

  TEST_CASE("compare never reports a negative gap") {
    std::string corpus;
    for (const auto& [id, g] : testing::random_corpus(25, 3)) corpus += emit_graph6(g) + "\n";
    for (const auto& [id, g] : testing::named_corpus()) corpus += emit_graph6(g) + "\n";
    const auto f = temp_file("gaps.g6", corpus);
    for (const char* k : {"1", "2", "3"}) {
      const auto r = invoke({"batch", f.string(), "--k", k, "--methods",
                             "framework,eigenpoly,optlp,ratio,minor,laplacian,minrank,chik,chikprime",
                             "--output-format", "json", "--threads", "1"});
      CHECK(r.code == kExitOk);
      for (const auto& row : rows_from_json_text(r.out)) {
        if (row.gap && !row.exact_exhausted) CHECK(*row.gap >= 0);
      }
    }
  }
}
