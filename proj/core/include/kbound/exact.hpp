#pragma once

#include <cstdint>
#include <vector>

#include "kbound/graph.hpp"

namespace kbound {

enum class ExactQuantity { AlphaK, ChiK };

/// Ground truth from exhaustive search. When `exhausted` is set the value is
/// only the best found within the node budget and must not be treated as exact.
struct ExactResult {
  ExactQuantity quantity = ExactQuantity::AlphaK;
  int value = 0;
  std::vector<Vertex> witness_set;      // alpha_k
  ColoringPartition witness_coloring;   // chi_k
  std::int64_t explored = 0;
  bool exhausted = false;
};

struct ExactOptions {
  std::int64_t budget = 50'000'000;  // search-tree nodes
  int max_vertices = 64;
};

/// Maximum independent set of G^k by branch-and-bound (maximum clique of the
/// complement with a greedy colouring bound).
ExactResult exact_alpha_k(const Graph& g, int k, const ExactOptions& options = {});

/// Chromatic number of G^k by iterative deepening over the number of colours,
/// starting from a clique lower bound.
ExactResult exact_chi_k(const Graph& g, int k, const ExactOptions& options = {.budget = 50'000'000, .max_vertices = 32});

struct IntMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<std::int64_t> data;  // row-major
  std::int64_t at(int i, int j) const { return data[static_cast<std::size_t>(i) * cols + j]; }
};

bool is_prime(std::int64_t p);

/// Rank over GF(p) by Gaussian elimination with modular inverses.
/// Throws Input NOT_PRIME unless p is a prime below 2^31.
int gfp_rank(const IntMatrix& m, std::int64_t p);

}  // namespace kbound
