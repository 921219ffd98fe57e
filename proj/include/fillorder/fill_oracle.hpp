#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "fillorder/static_graph.hpp"

namespace fillorder {

// Reference computations straight from the definition of the fill graph:
// u and v are adjacent iff they are joined by a path whose interior vertices
// are all eliminated. `eliminated` is indexed by vertex.

std::vector<Vertex> fill_neighborhood_bruteforce(const StaticGraph& g,
                                                 const std::vector<char>& eliminated, Vertex v);
std::size_t fill_degree_bruteforce(const StaticGraph& g, const std::vector<char>& eliminated,
                                   Vertex v);
// Adjacency of the fill graph; lists of eliminated vertices are empty.
std::vector<std::vector<Vertex>> fill_graph_bruteforce(const StaticGraph& g,
                                                       const std::vector<char>& eliminated);

// Lexicographically-first minimum degree ordering, recomputing every fill
// degree from scratch at each step.
OrderingResult exact_mindeg_bruteforce(const StaticGraph& g);

// Number of edges that appear in some intermediate fill graph but not in g.
std::uint64_t total_fill(const StaticGraph& g, std::span<const Vertex> order);

// Dense bitset elimination graph. Cheaper than recomputing from scratch; used
// for verification replays of longer orderings.
class EliminationReplay {
 public:
  explicit EliminationReplay(const StaticGraph& g);

  bool remaining(Vertex v) const { return !eliminated_[v]; }
  std::size_t degree(Vertex v) const { return degree_[v]; }
  std::size_t min_degree() const;
  std::vector<Vertex> neighbors(Vertex v) const;
  // Returns the number of fill edges created.
  std::uint64_t pivot(Vertex v);

 private:
  bool bit(Vertex r, Vertex c) const { return (rows_[r * words_ + c / 64] >> (c % 64)) & 1u; }

  std::size_t n_ = 0, words_ = 0;
  std::vector<std::uint64_t> rows_;
  std::vector<std::size_t> degree_;
  std::vector<char> eliminated_;
};

}  // namespace fillorder
