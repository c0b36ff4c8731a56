#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace kbound {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// All-pairs BFS distances. Entries are hop counts or kUnreachable.
class DistanceMatrix {
public:
  static constexpr int kUnreachable = -1;

  DistanceMatrix() = default;
  DistanceMatrix(int n, std::vector<int> entries);

  int size() const noexcept { return n_; }
  int at(Vertex u, Vertex v) const { return d_[static_cast<std::size_t>(u) * n_ + v]; }
  bool reachable(Vertex u, Vertex v) const { return at(u, v) != kUnreachable; }
  /// True iff d(u,v) > k, treating unreachable pairs as infinitely far apart.
  bool farther_than(Vertex u, Vertex v, int k) const {
    const int d = at(u, v);
    return d == kUnreachable || d > k;
  }

private:
  int n_ = 0;
  std::vector<int> d_;
};

/// Simple undirected graph on vertices 0..n-1. Immutable after construction;
/// the distance matrix is computed eagerly so a Graph may be shared across
/// threads without synchronisation.
class Graph {
public:
  Graph() = default;
  /// Duplicate edges are merged. Self-loops and out-of-range endpoints throw.
  Graph(int n, std::span<const Edge> edges);
  Graph(int n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  int order() const noexcept { return n_; }
  std::size_t size() const noexcept { return edges_.size(); }
  /// Edges with u < v, sorted lexicographically.
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const std::vector<Vertex>& neighbours(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
  bool adjacent(Vertex u, Vertex v) const {
    return matrix_[static_cast<std::size_t>(u) * n_ + v] != 0;
  }
  const DistanceMatrix& distances() const noexcept { return dist_; }

  bool is_connected() const;
  bool is_regular() const;
  /// Largest finite distance within a component; 0 for n <= 1.
  int diameter() const;
  /// Vertex sets of the connected components, each sorted, ordered by smallest member.
  std::vector<std::vector<Vertex>> components() const;
  Graph induced_subgraph(std::span<const Vertex> vertices) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<std::uint8_t> matrix_;
  DistanceMatrix dist_;
};

/// A partition of V(G) into classes, claimed to be a k-distance colouring.
struct ColoringPartition {
  std::vector<std::vector<Vertex>> classes;
  int k = 1;
};

DistanceMatrix distance_matrix(const Graph& g);

/// G^k: u ~ v iff 0 < d(u,v) <= k.
Graph power_graph(const Graph& g, int k);

struct WalkCounts {
  std::uint64_t total = 0;   // e^T A^t e
  std::uint64_t closed = 0;  // tr A^t
};

/// Exact counts of walks of length t. Throws a Numeric error on 64-bit overflow.
WalkCounts walk_counts(const Graph& g, int t);

/// Exact closed-walk counts (A^t)_uu for every vertex u. Same overflow policy.
std::vector<std::uint64_t> closed_walks(const Graph& g, int t);

/// Vertices of L(G) are the edges of g, in g.edges() order.
Graph line_graph(const Graph& g);

bool is_k_independent(const Graph& g, std::span<const Vertex> set, int k);

/// Throws Input errors PARTITION_OVERLAP / PARTITION_NOT_COVER for structural
/// defects; returns false when some class is not k-independent.
bool validate_coloring(const Graph& g, const ColoringPartition& partition);

Graph complement(const Graph& g);

}  // namespace kbound
