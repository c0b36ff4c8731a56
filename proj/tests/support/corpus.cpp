#include "support/corpus.hpp"

#include <random>

#include "kbound/named_graphs.hpp"

namespace kbound::testing {

std::vector<CorpusGraph> named_corpus() {
  return {{"K2", graphs::complete(2)},   {"P3", graphs::path(3)},  {"C4", graphs::cycle(4)},
          {"C5", graphs::cycle(5)},      {"C6", graphs::cycle(6)}, {"K1,3", graphs::star(3)},
          {"K3", graphs::complete(3)},   {"Petersen", graphs::petersen()},
          {"Q3", graphs::hypercube(3)}};
}

std::vector<CorpusGraph> random_corpus(int count, unsigned long long seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> order(5, 12);
  std::uniform_real_distribution<double> density(0.05, 0.6);
  std::vector<CorpusGraph> out;
  for (int i = 0; i < count; ++i) {
    const int n = order(rng);
    const double p = density(rng);
    out.push_back({"random-" + std::to_string(i), graphs::random_connected(n, p, rng())});
  }
  return out;
}

std::vector<CorpusGraph> full_corpus() {
  auto out = named_corpus();
  for (auto& g : random_corpus(200)) out.push_back(std::move(g));
  return out;
}

}  // namespace kbound::testing
