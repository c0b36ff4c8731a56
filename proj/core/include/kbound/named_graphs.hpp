#pragma once

#include <cstdint>
#include <string_view>

#include "kbound/graph.hpp"

namespace kbound::graphs {

Graph complete(int n);
Graph path(int n);
Graph cycle(int n);
Graph star(int leaves);        // K_{1,leaves}, centre is vertex 0
Graph empty(int n);
Graph petersen();
Graph hypercube(int dim);      // Q_dim
/// Connected graph on n vertices: a random spanning tree plus each remaining
/// pair independently with probability `density`.
Graph random_connected(int n, double density, std::uint64_t seed);

/// Look up "petersen", "k5", "c6", "p3", "k1,3", "q3", "e4" and similar.
Graph by_name(std::string_view name);

}  // namespace kbound::graphs
