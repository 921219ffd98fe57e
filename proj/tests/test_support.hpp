#pragma once

#include <vector>

#include "fillorder/rng.hpp"
#include "fillorder/static_graph.hpp"

namespace fillorder::testing {

// Seven-vertex example: vertex i here is v_{i+1}.
inline StaticGraph seven_vertex_graph() {
  return StaticGraph(7, std::vector<std::pair<Vertex, Vertex>>{
                            {0, 1}, {1, 2}, {1, 6}, {0, 6}, {4, 6}, {4, 5}, {3, 4}});
}

inline StaticGraph cycle_graph(std::size_t n) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (Vertex i = 0; i < n; ++i) e.emplace_back(i, static_cast<Vertex>((i + 1) % n));
  return StaticGraph(n, e);
}

inline StaticGraph path_graph(std::size_t n) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (Vertex i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return StaticGraph(n, e);
}

inline StaticGraph complete_graph(std::size_t n) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return StaticGraph(n, e);
}

inline StaticGraph star_graph(std::size_t leaves) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (Vertex i = 1; i <= leaves; ++i) e.emplace_back(0, i);
  return StaticGraph(leaves + 1, e);
}

inline StaticGraph gnp(std::size_t n, double p, Rng& rng) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j)
      if (rng.bernoulli(p)) e.emplace_back(i, j);
  return StaticGraph(n, e);
}

inline std::vector<Vertex> random_permutation(std::size_t n, Rng& rng) {
  std::vector<Vertex> p(n);
  for (Vertex i = 0; i < n; ++i) p[i] = i;
  for (std::size_t i = n; i > 1; --i) std::swap(p[i - 1], p[rng.uniform_index(i)]);
  return p;
}

}  // namespace fillorder::testing
