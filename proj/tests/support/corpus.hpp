#pragma once

#include <string>
#include <vector>

#include "kbound/graph.hpp"

namespace kbound::testing {

struct CorpusGraph {
  std::string id;
  Graph graph;
};

/// K2, P3, C4, C5, C6, K1,3, K3, Petersen, Q3.
std::vector<CorpusGraph> named_corpus();
/// `count` connected graphs with 5 <= n <= 12, deterministic in `seed`.
std::vector<CorpusGraph> random_corpus(int count, unsigned long long seed = 20240607);
std::vector<CorpusGraph> full_corpus();

}  // namespace kbound::testing
