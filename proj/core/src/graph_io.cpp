#include "kbound/graph_io.hpp"

#include <algorithm>
#include <charconv>
#include <map>

#include "kbound/error.hpp"

namespace kbound {
namespace {

constexpr int kBias = 63;
constexpr std::string_view kGraph6Header = ">>graph6<<";

struct Token {
  std::string_view text;
  std::size_t offset;
};

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' || c == '\v'; }

long long parse_integer(const Token& tok) {
  long long value = 0;
  const char* first = tok.text.data();
  const char* last = first + tok.text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last)
    throw_input("BAD_INTEGER", "expected an integer, got '" + std::string(tok.text) + "'", tok.offset);
  return value;
}

// Whitespace tokens of one line; `base` is the offset of the line start.
std::vector<Token> split_tokens(std::string_view line, std::size_t base) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && is_space(line[i])) ++i;
    const std::size_t start = i;
    while (i < line.size() && !is_space(line[i])) ++i;
    if (i > start) out.push_back({line.substr(start, i - start), base + start});
  }
  return out;
}

template <typename F>
void for_each_line(std::string_view input, F&& f) {
  std::size_t pos = 0;
  while (pos <= input.size()) {
    std::size_t end = input.find('\n', pos);
    if (end == std::string_view::npos) end = input.size();
    f(input.substr(pos, end - pos), pos);
    pos = end + 1;
  }
}

Graph decode_graph6(std::string_view s, std::size_t base) {
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  if (s.starts_with(kGraph6Header)) {
    s.remove_prefix(kGraph6Header.size());
    base += kGraph6Header.size();
  }
  if (s.empty()) throw_input("EMPTY_GRAPH6", "empty graph6 string", base);
  for (std::size_t i = 0; i < s.size(); ++i) {
    const auto c = static_cast<unsigned char>(s[i]);
    if (c < 63 || c > 126)
      throw_input("BAD_GRAPH6_BYTE", "byte outside 63..126 in graph6 data", base + i);
  }
  auto value = [&](std::size_t i) { return static_cast<long long>(static_cast<unsigned char>(s[i]) - kBias); };

  long long n = 0;
  std::size_t pos = 0;
  if (s[0] != 126) {
    n = value(0);
    pos = 1;
  } else if (s.size() >= 2 && s[1] != 126) {
    if (s.size() < 4) throw_input("BAD_GRAPH6_HEADER", "truncated graph6 size field", base);
    n = (value(1) << 12) | (value(2) << 6) | value(3);
    pos = 4;
  } else {
    if (s.size() < 8) throw_input("BAD_GRAPH6_HEADER", "truncated graph6 size field", base);
    for (std::size_t i = 2; i < 8; ++i) n = (n << 6) | value(i);
    pos = 8;
  }
  if (n > 1'000'000) throw_input("GRAPH_TOO_LARGE", "graph6 vertex count too large", base);

  const long long bits = n * (n - 1) / 2;
  const std::size_t expected = static_cast<std::size_t>((bits + 5) / 6);
  if (s.size() - pos != expected)
    throw_input("BAD_GRAPH6_LENGTH",
                "graph6 body has " + std::to_string(s.size() - pos) + " bytes, expected " +
                    std::to_string(expected),
                base + std::min(s.size(), pos + expected));

  std::vector<Edge> edges;
  long long bit = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++bit) {
      const std::size_t byte = pos + static_cast<std::size_t>(bit / 6);
      const int shift = 5 - static_cast<int>(bit % 6);
      if ((value(byte) >> shift) & 1) edges.emplace_back(i, j);
    }
  }
  return Graph(static_cast<int>(n), edges);
}

ParsedGraph identity_labels(Graph g) {
  ParsedGraph out;
  out.labels.resize(g.order());
  for (int v = 0; v < g.order(); ++v) out.labels[v] = v;
  out.graph = std::move(g);
  return out;
}

ParsedGraph decode_edge_list(std::string_view input, const ParseOptions& options) {
  std::vector<Token> tokens;
  for_each_line(input, [&](std::string_view line, std::size_t base) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first != std::string_view::npos && line[first] == '#') return;
    auto toks = split_tokens(line, base);
    tokens.insert(tokens.end(), toks.begin(), toks.end());
  });
  if (tokens.empty()) throw_input("MISSING_HEADER", "edge-list needs a vertex count", 0);
  const long long n = parse_integer(tokens[0]);
  if (n < 0) throw_input("BAD_HEADER", "vertex count must be nonnegative", tokens[0].offset);
  if ((tokens.size() - 1) % 2 != 0)
    throw_input("ODD_TOKEN_COUNT", "edge-list has an unpaired endpoint", tokens.back().offset);

  std::vector<std::pair<long long, long long>> raw;
  for (std::size_t i = 1; i < tokens.size(); i += 2) {
    const long long u = parse_integer(tokens[i]);
    const long long v = parse_integer(tokens[i + 1]);
    for (auto [x, tok] : {std::pair{u, &tokens[i]}, std::pair{v, &tokens[i + 1]}}) {
      if (x < 0 || (!options.remap_labels && x >= n))
        throw_input("VERTEX_OUT_OF_RANGE",
                    "vertex " + std::to_string(x) + " out of range for n=" + std::to_string(n),
                    tok->offset);
    }
    if (u == v) throw_input("SELF_LOOP", "self-loop in edge-list", tokens[i].offset);
    raw.emplace_back(u, v);
  }

  if (!options.remap_labels) {
    std::vector<Edge> edges;
    for (auto [u, v] : raw) edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    return identity_labels(Graph(static_cast<int>(n), edges));
  }

  std::map<long long, Vertex> index;
  for (auto [u, v] : raw) {
    index.emplace(u, 0);
    index.emplace(v, 0);
  }
  if (static_cast<long long>(index.size()) > n)
    throw_input("VERTEX_OUT_OF_RANGE",
                std::to_string(index.size()) + " distinct labels exceed n=" + std::to_string(n),
                tokens[0].offset);
  ParsedGraph out;
  out.labels.assign(static_cast<std::size_t>(n), -1);
  Vertex next = 0;
  for (auto& [label, v] : index) {
    v = next++;
    out.labels[v] = label;
  }
  std::vector<Edge> edges;
  for (auto [u, v] : raw) edges.emplace_back(index[u], index[v]);
  out.graph = Graph(static_cast<int>(n), edges);
  out.remapped = true;
  return out;
}

ParsedGraph decode_dimacs(std::string_view input) {
  long long n = -1;
  std::vector<Edge> edges;
  for_each_line(input, [&](std::string_view line, std::size_t base) {
    auto toks = split_tokens(line, base);
    if (toks.empty() || toks[0].text == "c") return;
    if (toks[0].text == "p") {
      if (n >= 0) throw_input("DUPLICATE_HEADER", "second 'p' line", toks[0].offset);
      if (toks.size() != 4 || (toks[1].text != "edge" && toks[1].text != "col"))
        throw_input("BAD_HEADER", "expected 'p edge n m'", toks[0].offset);
      n = parse_integer(toks[2]);
      if (n < 0) throw_input("BAD_HEADER", "vertex count must be nonnegative", toks[2].offset);
      parse_integer(toks[3]);
      return;
    }
    if (toks[0].text == "e") {
      if (n < 0) throw_input("MISSING_HEADER", "'e' line before 'p' header", toks[0].offset);
      if (toks.size() != 3) throw_input("BAD_EDGE_LINE", "expected 'e u v'", toks[0].offset);
      const long long u = parse_integer(toks[1]);
      const long long v = parse_integer(toks[2]);
      if (u < 1 || u > n) throw_input("VERTEX_OUT_OF_RANGE", "vertex " + std::to_string(u), toks[1].offset);
      if (v < 1 || v > n) throw_input("VERTEX_OUT_OF_RANGE", "vertex " + std::to_string(v), toks[2].offset);
      if (u == v) throw_input("SELF_LOOP", "self-loop in DIMACS input", toks[0].offset);
      edges.emplace_back(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1));
      return;
    }
    throw_input("BAD_LINE", "unrecognised DIMACS line", toks[0].offset);
  });
  if (n < 0) throw_input("MISSING_HEADER", "DIMACS input has no 'p' line", 0);
  return identity_labels(Graph(static_cast<int>(n), edges));
}

}  // namespace

ParsedGraph parse_graph(std::string_view input, GraphFormat format, const ParseOptions& options) {
  switch (format) {
    case GraphFormat::Graph6: {
      auto start = input.find_first_not_of(" \t\r\n");
      if (start == std::string_view::npos) throw_input("EMPTY_GRAPH6", "empty graph6 input", 0);
      auto end = input.find('\n', start);
      auto line = input.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);
      if (line == kGraph6Header) {
        // Header on its own line.
        start = input.find_first_not_of(" \t\r\n", start + line.size());
        if (start == std::string_view::npos) throw_input("EMPTY_GRAPH6", "empty graph6 input", 0);
        end = input.find('\n', start);
        line = input.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);
      }
      if (end != std::string_view::npos &&
          input.find_first_not_of(" \t\r\n", end) != std::string_view::npos)
        throw_input("MULTIPLE_GRAPHS", "more than one graph6 line; use a corpus reader", end + 1);
      return identity_labels(decode_graph6(line, start));
    }
    case GraphFormat::EdgeList: return decode_edge_list(input, options);
    case GraphFormat::Dimacs: return decode_dimacs(input);
  }
  throw_input("BAD_FORMAT", "unknown graph format");
}

std::vector<Graph> parse_graph6_corpus(std::string_view input) {
  std::vector<Graph> out;
  for_each_line(input, [&](std::string_view line, std::size_t base) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return;
    line.remove_prefix(first);
    if (line.starts_with(kGraph6Header) &&
        line.substr(kGraph6Header.size()).find_first_not_of(" \t\r") == std::string_view::npos)
      return;
    out.push_back(decode_graph6(line, base + first));
  });
  return out;
}

std::string emit_graph6(const Graph& g) {
  const long long n = g.order();
  std::string out;
  auto put = [&](long long six) { out.push_back(static_cast<char>(six + kBias)); };
  if (n <= 62) {
    put(n);
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) put((n >> shift) & 63);
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int shift = 30; shift >= 0; shift -= 6) put((n >> shift) & 63);
  }
  int acc = 0, filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        put(acc);
        acc = filled = 0;
      }
    }
  }
  if (filled > 0) put(acc << (6 - filled));
  return out;
}

std::string emit_edge_list(const Graph& g) {
  std::string out = std::to_string(g.order()) + "\n";
  for (auto [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

GraphFormat format_from_extension(std::string_view path) {
  auto dot = path.rfind('.');
  const auto ext = dot == std::string_view::npos ? std::string_view{} : path.substr(dot + 1);
  if (ext == "g6") return GraphFormat::Graph6;
  if (ext == "col" || ext == "dimacs") return GraphFormat::Dimacs;
  return GraphFormat::EdgeList;
}

GraphFormat format_from_name(std::string_view name) {
  if (name == "graph6" || name == "g6") return GraphFormat::Graph6;
  if (name == "edge-list" || name == "edgelist" || name == "el") return GraphFormat::EdgeList;
  if (name == "dimacs") return GraphFormat::Dimacs;
  throw_input("BAD_FORMAT", "unknown graph format '" + std::string(name) + "'");
}

}  // namespace kbound
