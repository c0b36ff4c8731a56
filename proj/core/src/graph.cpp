#include "kbound/graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "kbound/error.hpp"

namespace kbound {

DistanceMatrix::DistanceMatrix(int n, std::vector<int> entries) : n_(n), d_(std::move(entries)) {}

Graph::Graph(int n, std::span<const Edge> edges) : n_(n) {
  if (n < 0) throw_input("BAD_ORDER", "vertex count must be nonnegative");
  edges_.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw_input("VERTEX_OUT_OF_RANGE", "edge (" + std::to_string(u) + "," + std::to_string(v) +
                                             ") out of range for n=" + std::to_string(n));
    }
    if (u == v) throw_input("SELF_LOOP", "self-loop at vertex " + std::to_string(u));
    edges_.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());

  adj_.assign(n, {});
  matrix_.assign(static_cast<std::size_t>(n) * n, 0);
  for (auto [u, v] : edges_) {
    adj_[u].push_back(v);
    adj_[v].push_back(u);
    matrix_[static_cast<std::size_t>(u) * n + v] = 1;
    matrix_[static_cast<std::size_t>(v) * n + u] = 1;
  }
  for (auto& row : adj_) std::sort(row.begin(), row.end());
  dist_ = distance_matrix(*this);
}

bool Graph::is_connected() const {
  if (n_ <= 1) return true;
  for (Vertex v = 1; v < n_; ++v)
    if (!dist_.reachable(0, v)) return false;
  return true;
}

bool Graph::is_regular() const {
  for (Vertex v = 1; v < n_; ++v)
    if (degree(v) != degree(0)) return false;
  return true;
}

int Graph::diameter() const {
  int best = 0;
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v = u + 1; v < n_; ++v) best = std::max(best, dist_.at(u, v));
  return best;
}

std::vector<std::vector<Vertex>> Graph::components() const {
  std::vector<std::vector<Vertex>> out;
  std::vector<bool> seen(n_, false);
  for (Vertex s = 0; s < n_; ++s) {
    if (seen[s]) continue;
    auto& comp = out.emplace_back();
    for (Vertex v = s; v < n_; ++v) {
      if (dist_.reachable(s, v)) {
        seen[v] = true;
        comp.push_back(v);
      }
    }
  }
  return out;
}

Graph Graph::induced_subgraph(std::span<const Vertex> vertices) const {
  std::vector<int> index(n_, -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const Vertex v = vertices[i];
    if (v < 0 || v >= n_) throw_input("VERTEX_OUT_OF_RANGE", "vertex " + std::to_string(v));
    index[v] = static_cast<int>(i);
  }
  std::vector<Edge> sub;
  for (auto [u, v] : edges_)
    if (index[u] >= 0 && index[v] >= 0) sub.emplace_back(index[u], index[v]);
  return Graph(static_cast<int>(vertices.size()), sub);
}

DistanceMatrix distance_matrix(const Graph& g) {
  const int n = g.order();
  std::vector<int> d(static_cast<std::size_t>(n) * n, DistanceMatrix::kUnreachable);
  std::vector<Vertex> queue(n);
  for (Vertex s = 0; s < n; ++s) {
    int* row = d.data() + static_cast<std::size_t>(s) * n;
    std::size_t head = 0, tail = 0;
    row[s] = 0;
    queue[tail++] = s;
    while (head < tail) {
      const Vertex u = queue[head++];
      for (Vertex w : g.neighbours(u)) {
        if (row[w] == DistanceMatrix::kUnreachable) {
          row[w] = row[u] + 1;
          queue[tail++] = w;
        }
      }
    }
  }
  return DistanceMatrix(n, std::move(d));
}

Graph power_graph(const Graph& g, int k) {
  if (k < 1) throw_input("BAD_K", "k must be >= 1");
  const auto& d = g.distances();
  std::vector<Edge> edges;
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = u + 1; v < g.order(); ++v)
      if (!d.farther_than(u, v, k)) edges.emplace_back(u, v);
  return Graph(g.order(), edges);
}

namespace {

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_add_overflow(a, b, &r))
    throw_numeric("WALK_COUNT_OVERFLOW", "walk count exceeds 64-bit range");
  return r;
}

// Rows of A^t, built as A^t = A * A^{t-1}; only additions are needed.
std::vector<std::uint64_t> adjacency_power(const Graph& g, int t) {
  const std::size_t n = g.order();
  std::vector<std::uint64_t> cur(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) cur[i * n + i] = 1;
  std::vector<std::uint64_t> next(n * n);
  for (int step = 0; step < t; ++step) {
    std::fill(next.begin(), next.end(), 0);
    for (std::size_t u = 0; u < n; ++u)
      for (Vertex w : g.neighbours(static_cast<Vertex>(u)))
        for (std::size_t v = 0; v < n; ++v)
          next[u * n + v] = checked_add(next[u * n + v], cur[w * n + v]);
    cur.swap(next);
  }
  return cur;
}

}  // namespace

WalkCounts walk_counts(const Graph& g, int t) {
  if (t < 0) throw_input("BAD_LENGTH", "walk length must be nonnegative");
  const std::size_t n = g.order();
  const auto power = adjacency_power(g, t);
  WalkCounts out;
  for (std::size_t u = 0; u < n; ++u) {
    out.closed = checked_add(out.closed, power[u * n + u]);
    for (std::size_t v = 0; v < n; ++v) out.total = checked_add(out.total, power[u * n + v]);
  }
  return out;
}

std::vector<std::uint64_t> closed_walks(const Graph& g, int t) {
  if (t < 0) throw_input("BAD_LENGTH", "walk length must be nonnegative");
  const std::size_t n = g.order();
  const auto power = adjacency_power(g, t);
  std::vector<std::uint64_t> out(n);
  for (std::size_t u = 0; u < n; ++u) out[u] = power[u * n + u];
  return out;
}

Graph line_graph(const Graph& g) {
  const auto& e = g.edges();
  if (e.empty()) throw_precondition("EMPTY_EDGE_SET", "line graph of an edgeless graph");
  std::vector<Edge> out;
  for (std::size_t i = 0; i < e.size(); ++i)
    for (std::size_t j = i + 1; j < e.size(); ++j)
      if (e[i].first == e[j].first || e[i].first == e[j].second || e[i].second == e[j].first ||
          e[i].second == e[j].second)
        out.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
  return Graph(static_cast<int>(e.size()), out);
}

bool is_k_independent(const Graph& g, std::span<const Vertex> set, int k) {
  if (k < 1) throw_input("BAD_K", "k must be >= 1");
  for (Vertex v : set)
    if (v < 0 || v >= g.order())
      throw_input("VERTEX_OUT_OF_RANGE", "vertex " + std::to_string(v) + " not in graph");
  const auto& d = g.distances();
  for (std::size_t i = 0; i < set.size(); ++i)
    for (std::size_t j = i + 1; j < set.size(); ++j) {
      if (set[i] == set[j]) continue;
      if (!d.farther_than(set[i], set[j], k)) return false;
    }
  return true;
}

bool validate_coloring(const Graph& g, const ColoringPartition& partition) {
  std::vector<int> owner(g.order(), -1);
  for (std::size_t c = 0; c < partition.classes.size(); ++c) {
    for (Vertex v : partition.classes[c]) {
      if (v < 0 || v >= g.order())
        throw_input("VERTEX_OUT_OF_RANGE", "vertex " + std::to_string(v) + " not in graph");
      if (owner[v] != -1)
        throw_input("PARTITION_OVERLAP", "vertex " + std::to_string(v) + " in two classes");
      owner[v] = static_cast<int>(c);
    }
  }
  for (Vertex v = 0; v < g.order(); ++v)
    if (owner[v] == -1)
      throw_input("PARTITION_NOT_COVER", "vertex " + std::to_string(v) + " not covered");
  for (const auto& cls : partition.classes)
    if (!is_k_independent(g, cls, partition.k)) return false;
  return true;
}

Graph complement(const Graph& g) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = u + 1; v < g.order(); ++v)
      if (!g.adjacent(u, v)) edges.emplace_back(u, v);
  return Graph(g.order(), edges);
}

}  // namespace kbound
