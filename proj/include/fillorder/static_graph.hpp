#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fillorder/common.hpp"

namespace fillorder {

// Immutable simple undirected graph in CSR form. Adjacency lists are sorted.
class StaticGraph {
 public:
  StaticGraph() = default;
  // Self-loops and duplicate edges are dropped; edges are symmetrized.
  StaticGraph(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edges);
  StaticGraph(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& edges)
      : StaticGraph(n, std::span<const std::pair<Vertex, Vertex>>(edges)) {}

  std::size_t n() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t m() const { return adj_.size() / 2; }

  std::span<const Vertex> adj(Vertex v) const {
    return {adj_.data() + offsets_[v], adj_.data() + offsets_[v + 1]};
  }
  std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
  bool has_edge(Vertex u, Vertex v) const;
  std::size_t max_degree() const;
  std::size_t min_degree() const;

  // Each edge once, as (u, v) with u < v, in lexicographic order.
  std::vector<std::pair<Vertex, Vertex>> edges() const;

  // Original label of each vertex (identity unless set by a loader).
  const std::vector<std::int64_t>& labels() const { return labels_; }
  void set_labels(std::vector<std::int64_t> labels) { labels_ = std::move(labels); }

 private:
  std::vector<std::size_t> offsets_;
  std::vector<Vertex> adj_;
  std::vector<std::int64_t> labels_;
};

struct OrderingResult {
  std::vector<Vertex> order;
  std::vector<std::int64_t> reported_degree;
  std::string algorithm;
  std::uint64_t seed = 0;
  std::map<std::string, std::uint64_t> counters;
  double wall_time = 0.0;
};

bool is_permutation_of_n(std::span<const Vertex> order, std::size_t n);

}  // namespace fillorder
