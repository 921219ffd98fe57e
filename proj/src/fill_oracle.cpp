#include "fillorder/fill_oracle.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <limits>

namespace fillorder {

std::vector<Vertex> fill_neighborhood_bruteforce(const StaticGraph& g,
                                                 const std::vector<char>& eliminated, Vertex v) {
  if (v >= g.n()) throw InvalidArgument("vertex out of range");
  if (eliminated[v]) throw InvalidArgument("vertex is eliminated");
  std::vector<char> seen(g.n(), 0);
  std::vector<Vertex> stack{v}, out;
  seen[v] = 1;
  while (!stack.empty()) {
    Vertex x = stack.back();
    stack.pop_back();
    for (Vertex y : g.adj(x)) {
      if (seen[y]) continue;
      seen[y] = 1;
      if (eliminated[y])
        stack.push_back(y);
      else
        out.push_back(y);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t fill_degree_bruteforce(const StaticGraph& g, const std::vector<char>& eliminated,
                                   Vertex v) {
  return fill_neighborhood_bruteforce(g, eliminated, v).size();
}

std::vector<std::vector<Vertex>> fill_graph_bruteforce(const StaticGraph& g,
                                                       const std::vector<char>& eliminated) {
  std::vector<std::vector<Vertex>> out(g.n());
  for (Vertex v = 0; v < g.n(); ++v)
    if (!eliminated[v]) out[v] = fill_neighborhood_bruteforce(g, eliminated, v);
  return out;
}

OrderingResult exact_mindeg_bruteforce(const StaticGraph& g) {
  auto start = std::chrono::steady_clock::now();
  OrderingResult res;
  res.algorithm = "bruteforce";
  std::vector<char> eliminated(g.n(), 0);
  for (std::size_t t = 0; t < g.n(); ++t) {
    Vertex best = kNoVertex;
    std::size_t best_deg = std::numeric_limits<std::size_t>::max();
    for (Vertex v = 0; v < g.n(); ++v) {
      if (eliminated[v]) continue;
      std::size_t d = fill_degree_bruteforce(g, eliminated, v);
      if (d < best_deg) {
        best_deg = d;
        best = v;
      }
    }
    res.order.push_back(best);
    res.reported_degree.push_back(static_cast<std::int64_t>(best_deg));
    eliminated[best] = 1;
  }
  res.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return res;
}

std::uint64_t total_fill(const StaticGraph& g, std::span<const Vertex> order) {
  if (!is_permutation_of_n(order, g.n())) throw InvalidArgument("order is not a permutation");
  EliminationReplay replay(g);
  std::uint64_t fill = 0;
  for (Vertex v : order) fill += replay.pivot(v);
  return fill;
}

EliminationReplay::EliminationReplay(const StaticGraph& g)
    : n_(g.n()), words_((g.n() + 63) / 64), rows_(n_ * words_, 0), degree_(n_), eliminated_(n_, 0) {
  for (Vertex v = 0; v < n_; ++v) {
    for (Vertex u : g.adj(v)) rows_[v * words_ + u / 64] |= std::uint64_t{1} << (u % 64);
    degree_[v] = g.degree(v);
  }
}

std::size_t EliminationReplay::min_degree() const {
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (Vertex v = 0; v < n_; ++v)
    if (!eliminated_[v]) best = std::min(best, degree_[v]);
  return best;
}

std::vector<Vertex> EliminationReplay::neighbors(Vertex v) const {
  std::vector<Vertex> out;
  for (std::size_t w = 0; w < words_; ++w) {
    std::uint64_t bits = rows_[v * words_ + w];
    while (bits) {
      out.push_back(static_cast<Vertex>(w * 64 + static_cast<std::size_t>(std::countr_zero(bits))));
      bits &= bits - 1;
    }
  }
  return out;
}

std::uint64_t EliminationReplay::pivot(Vertex v) {
  if (eliminated_[v]) throw InvalidArgument("vertex already eliminated");
  std::vector<Vertex> nb = neighbors(v);
  std::uint64_t added = 0;
  const std::uint64_t* rv = &rows_[v * words_];
  for (Vertex u : nb) {
    std::uint64_t* ru = &rows_[u * words_];
    std::size_t deg = 0;
    for (std::size_t w = 0; w < words_; ++w) {
      std::uint64_t merged = ru[w] | rv[w];
      if (w == u / 64) merged &= ~(std::uint64_t{1} << (u % 64));
      if (w == v / 64) merged &= ~(std::uint64_t{1} << (v % 64));
      ru[w] = merged;
      deg += static_cast<std::size_t>(std::popcount(merged));
    }
    // Neighbors lose v and gain everything in N(v) they did not have.
    added += deg + 1 - degree_[u];
    degree_[u] = deg;
  }
  std::fill(rows_.begin() + static_cast<std::ptrdiff_t>(v * words_),
            rows_.begin() + static_cast<std::ptrdiff_t>((v + 1) * words_), 0);
  degree_[v] = 0;
  eliminated_[v] = 1;
  return added / 2;
}

}  // namespace fillorder
