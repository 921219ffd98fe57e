#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "fillorder/dynamic_sketch.hpp"

namespace fillorder {

// Per remaining vertex, the multiset of its minimizers across k sketch copies
// plus a global index ordered by (distinct count, vertex id).
class MinimizerTable {
 public:
  MinimizerTable() = default;
  explicit MinimizerTable(std::size_t n) : per_vertex_(n) {}

  void add(Vertex u, Vertex minimizer);
  void remove(Vertex u, Vertex minimizer);
  void drop_vertex(Vertex u);

  std::size_t distinct(Vertex u) const { return per_vertex_[u].size(); }
  bool empty() const { return index_.empty(); }
  // Vertex with fewest distinct minimizers, smallest id on ties.
  std::pair<std::size_t, Vertex> front() const { return index_.front(); }

 private:
  void reindex(Vertex u, std::size_t before);

  std::vector<std::map<Vertex, std::uint32_t>> per_vertex_;
  OrderedSet<std::pair<std::size_t, Vertex>> index_;
};

// Exact greedy ordering assuming every minimum fill degree is at most delta.
// Uses 10 (delta + 1) ceil(log2 n) sketch copies.
OrderingResult delta_capped_min_degree(const StaticGraph& g, std::size_t delta, std::uint64_t seed);

// Exact greedy ordering without a degree cap: starts with c = min degree and
// doubles c (adding replayed sketch copies) while the candidate minimum degree
// exceeds c / 2.
OrderingResult output_sensitive_min_degree(const StaticGraph& g, std::uint64_t seed);

std::size_t delta_capped_sketch_count(std::size_t n, std::size_t delta);

}  // namespace fillorder
