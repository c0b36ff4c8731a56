#include "kbound/named_graphs.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <random>
#include <string>

#include "kbound/error.hpp"

namespace kbound::graphs {

Graph complete(int n) {
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return Graph(n, e);
}

Graph path(int n) {
  std::vector<Edge> e;
  for (int v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
  return Graph(n, e);
}

Graph cycle(int n) {
  if (n < 3) throw_input("BAD_ORDER", "cycle needs n >= 3");
  std::vector<Edge> e;
  for (int v = 0; v < n; ++v) e.emplace_back(v, (v + 1) % n);
  return Graph(n, e);
}

Graph star(int leaves) {
  std::vector<Edge> e;
  for (int v = 1; v <= leaves; ++v) e.emplace_back(0, v);
  return Graph(leaves + 1, e);
}

Graph empty(int n) { return Graph(n, std::span<const Edge>{}); }

Graph petersen() {
  // Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5.
  std::vector<Edge> e;
  for (int i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);
    e.emplace_back(5 + i, 5 + (i + 2) % 5);
    e.emplace_back(i, i + 5);
  }
  return Graph(10, e);
}

Graph hypercube(int dim) {
  const int n = 1 << dim;
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u)
    for (int b = 0; b < dim; ++b)
      if (int v = u ^ (1 << b); u < v) e.emplace_back(u, v);
  return Graph(n, e);
}

Graph random_connected(int n, double density, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<Edge> e;
  for (int i = 1; i < n; ++i) {
    std::uniform_int_distribution<int> pick(0, i - 1);
    e.emplace_back(order[pick(rng)], order[i]);
  }
  std::bernoulli_distribution coin(density);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) e.emplace_back(u, v);
  return Graph(n, e);
}

namespace {

int number_after(std::string_view s, std::size_t prefix) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data() + prefix, s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || value < 0)
    throw_input("UNKNOWN_GRAPH", "unknown named graph '" + std::string(s) + "'");
  return value;
}

}  // namespace

Graph by_name(std::string_view raw) {
  std::string name(raw);
  std::transform(name.begin(), name.end(), name.begin(), [](unsigned char c) { return std::tolower(c); });
  if (name == "petersen") return petersen();
  if (name.starts_with("k1,")) return star(number_after(name, 3));
  if (name.size() < 2) throw_input("UNKNOWN_GRAPH", "unknown named graph '" + name + "'");
  switch (name[0]) {
    case 'k': return complete(number_after(name, 1));
    case 'p': return path(number_after(name, 1));
    case 'c': return cycle(number_after(name, 1));
    case 'q': return hypercube(number_after(name, 1));
    case 'e': return empty(number_after(name, 1));
    default: break;
  }
  throw_input("UNKNOWN_GRAPH", "unknown named graph '" + name + "'");
}

}  // namespace kbound::graphs
