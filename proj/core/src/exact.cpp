#include "kbound/exact.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "kbound/error.hpp"

namespace kbound {
namespace {

class Bitset {
public:
  explicit Bitset(int size = 0) : words_((size + 63) / 64, 0) {}
  void set(int i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(int i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
  bool any() const {
    for (auto w : words_)
      if (w) return true;
    return false;
  }
  Bitset operator&(const Bitset& o) const {
    Bitset r = *this;
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] &= o.words_[i];
    return r;
  }
  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      auto bits = words_[w];
      while (bits) {
        f(static_cast<int>(w * 64 + std::countr_zero(bits)));
        bits &= bits - 1;
      }
    }
  }

private:
  std::vector<std::uint64_t> words_;
};

// Maximum clique with sequential greedy colouring bounds (MCQ style).
class CliqueSearch {
public:
  CliqueSearch(const Graph& h, std::int64_t budget) : h_(h), budget_(budget) {
    const int n = h.order();
    rows_.assign(n, Bitset(n));
    for (auto [u, v] : h.edges()) {
      rows_[u].set(v);
      rows_[v].set(u);
    }
    // Branch on high-degree vertices first.
    order_.resize(n);
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) { return h.degree(a) > h.degree(b); });
  }

  void run() {
    const int n = h_.order();
    if (n == 0) return;
    Bitset all(n);
    for (int v = 0; v < n; ++v) all.set(v);
    expand(all);
  }

  const std::vector<Vertex>& best() const { return best_; }
  std::int64_t explored() const { return explored_; }
  bool exhausted() const { return exhausted_; }

private:
  void expand(Bitset candidates) {
    if (exhausted_) return;
    if (++explored_ > budget_) {
      exhausted_ = true;
      return;
    }
    // Greedy colouring of the candidates, in branching order.
    std::vector<int> verts, colours;
    {
      std::vector<int> pending;
      for (int v : order_)
        if (candidates.test(v)) pending.push_back(v);
      int colour = 0;
      while (!pending.empty()) {
        ++colour;
        std::vector<int> rest;
        std::vector<int> cls;
        for (int v : pending) {
          bool clash = false;
          for (int c : cls)
            if (rows_[v].test(c)) {
              clash = true;
              break;
            }
          if (clash) rest.push_back(v);
          else {
            cls.push_back(v);
            verts.push_back(v);
            colours.push_back(colour);
          }
        }
        pending.swap(rest);
      }
    }
    for (int i = static_cast<int>(verts.size()) - 1; i >= 0; --i) {
      if (current_.size() + colours[i] <= best_.size()) return;
      const int v = verts[i];
      current_.push_back(v);
      Bitset next = candidates & rows_[v];
      if (next.any()) expand(next);
      else if (current_.size() > best_.size()) best_ = current_;
      current_.pop_back();
      candidates.reset(v);
      if (exhausted_) return;
    }
  }

  const Graph& h_;
  std::vector<Bitset> rows_;
  std::vector<int> order_;
  std::vector<Vertex> current_, best_;
  std::int64_t budget_;
  std::int64_t explored_ = 0;
  bool exhausted_ = false;
};

void check_size(const Graph& g, int k, int max_vertices) {
  if (k < 1) throw_input("BAD_K", "k must be >= 1");
  if (g.order() > max_vertices)
    throw_precondition("TOO_LARGE", "exact search limited to " + std::to_string(max_vertices) + " vertices");
}

// Backtracking t-colouring with DSATUR vertex selection.
class Colourer {
public:
  Colourer(const Graph& g, std::int64_t& explored, std::int64_t budget)
      : g_(g), explored_(explored), budget_(budget), colour_(g.order(), -1) {}

  bool colour_with(int t) {
    t_ = t;
    std::fill(colour_.begin(), colour_.end(), -1);
    return step(0, 0);
  }
  const std::vector<int>& colours() const { return colour_; }
  bool exhausted() const { return exhausted_; }

private:
  bool step(int coloured, int used) {
    if (coloured == g_.order()) return true;
    if (++explored_ > budget_) {
      exhausted_ = true;
      return false;
    }
    int pick = -1, best_sat = -1, best_deg = -1;
    std::vector<bool> seen(t_);
    for (int v = 0; v < g_.order(); ++v) {
      if (colour_[v] >= 0) continue;
      std::fill(seen.begin(), seen.end(), false);
      int sat = 0;
      for (int w : g_.neighbours(v))
        if (colour_[w] >= 0 && !seen[colour_[w]]) {
          seen[colour_[w]] = true;
          ++sat;
        }
      if (sat > best_sat || (sat == best_sat && g_.degree(v) > best_deg)) {
        pick = v;
        best_sat = sat;
        best_deg = g_.degree(v);
      }
    }
    const int limit = std::min(t_, used + 1);  // new colour only as the next unused one
    for (int c = 0; c < limit; ++c) {
      bool ok = true;
      for (int w : g_.neighbours(pick))
        if (colour_[w] == c) {
          ok = false;
          break;
        }
      if (!ok) continue;
      colour_[pick] = c;
      if (step(coloured + 1, std::max(used, c + 1))) return true;
      colour_[pick] = -1;
      if (exhausted_) return false;
    }
    return false;
  }

  const Graph& g_;
  std::int64_t& explored_;
  std::int64_t budget_;
  std::vector<int> colour_;
  int t_ = 0;
  bool exhausted_ = false;
};

std::vector<int> dsatur_greedy(const Graph& g) {
  const int n = g.order();
  std::vector<int> colour(n, -1);
  for (int step = 0; step < n; ++step) {
    int pick = -1, best_sat = -1, best_deg = -1;
    for (int v = 0; v < n; ++v) {
      if (colour[v] >= 0) continue;
      std::vector<int> cs;
      for (int w : g.neighbours(v))
        if (colour[w] >= 0) cs.push_back(colour[w]);
      std::sort(cs.begin(), cs.end());
      const int sat = static_cast<int>(std::unique(cs.begin(), cs.end()) - cs.begin());
      if (sat > best_sat || (sat == best_sat && g.degree(v) > best_deg)) {
        pick = v;
        best_sat = sat;
        best_deg = g.degree(v);
      }
    }
    std::vector<bool> taken(n + 1, false);
    for (int w : g.neighbours(pick))
      if (colour[w] >= 0) taken[colour[w]] = true;
    int c = 0;
    while (taken[c]) ++c;
    colour[pick] = c;
  }
  return colour;
}

ColoringPartition to_partition(const std::vector<int>& colour, int k) {
  ColoringPartition p;
  p.k = k;
  const int t = colour.empty() ? 0 : *std::max_element(colour.begin(), colour.end()) + 1;
  p.classes.assign(t, {});
  for (int v = 0; v < static_cast<int>(colour.size()); ++v) p.classes[colour[v]].push_back(v);
  return p;
}

std::int64_t mod_pow(std::int64_t b, std::int64_t e, std::int64_t m) {
  std::int64_t r = 1 % m;
  b %= m;
  while (e > 0) {
    if (e & 1) r = r * b % m;
    b = b * b % m;
    e >>= 1;
  }
  return r;
}

}  // namespace

ExactResult exact_alpha_k(const Graph& g, int k, const ExactOptions& options) {
  check_size(g, k, options.max_vertices);
  const Graph conflict = complement(power_graph(g, k));
  CliqueSearch search(conflict, options.budget);
  search.run();
  ExactResult r;
  r.quantity = ExactQuantity::AlphaK;
  r.witness_set = search.best();
  std::sort(r.witness_set.begin(), r.witness_set.end());
  r.value = static_cast<int>(r.witness_set.size());
  r.explored = search.explored();
  r.exhausted = search.exhausted();
  return r;
}

ExactResult exact_chi_k(const Graph& g, int k, const ExactOptions& options) {
  check_size(g, k, options.max_vertices);
  const Graph power = power_graph(g, k);
  ExactResult r;
  r.quantity = ExactQuantity::ChiK;
  if (g.order() == 0) {
    r.witness_coloring.k = k;
    return r;
  }
  CliqueSearch clique(power, options.budget);
  clique.run();
  r.explored = clique.explored();
  const int lower = std::max<int>(1, static_cast<int>(clique.best().size()));

  const auto greedy = dsatur_greedy(power);
  const int upper = *std::max_element(greedy.begin(), greedy.end()) + 1;
  r.value = upper;
  r.witness_coloring = to_partition(greedy, k);
  r.exhausted = clique.exhausted();

  Colourer colourer(power, r.explored, options.budget);
  for (int t = lower; t < upper && !r.exhausted; ++t) {
    if (colourer.colour_with(t)) {
      r.value = t;
      r.witness_coloring = to_partition(colourer.colours(), k);
      break;
    }
    r.exhausted = colourer.exhausted();
  }
  return r;
}

bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

int gfp_rank(const IntMatrix& m, std::int64_t p) {
  if (p >= (std::int64_t{1} << 31) || !is_prime(p))
    throw_input("NOT_PRIME", "field characteristic " + std::to_string(p) + " is not a prime below 2^31");
  std::vector<std::int64_t> a(m.data.size());
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = ((m.data[i] % p) + p) % p;
  auto at = [&](int i, int j) -> std::int64_t& { return a[static_cast<std::size_t>(i) * m.cols + j]; };
  int rank = 0;
  for (int c = 0; c < m.cols && rank < m.rows; ++c) {
    int piv = -1;
    for (int r = rank; r < m.rows; ++r)
      if (at(r, c) != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    if (piv != rank)
      for (int j = 0; j < m.cols; ++j) std::swap(at(piv, j), at(rank, j));
    const std::int64_t inv = mod_pow(at(rank, c), p - 2, p);
    for (int j = c; j < m.cols; ++j) at(rank, j) = at(rank, j) * inv % p;
    for (int r = 0; r < m.rows; ++r) {
      if (r == rank || at(r, c) == 0) continue;
      const std::int64_t f = at(r, c);
      for (int j = c; j < m.cols; ++j) at(r, j) = ((at(r, j) - f * at(rank, j)) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

}  // namespace kbound
