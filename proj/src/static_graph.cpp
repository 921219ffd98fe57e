#include "fillorder/static_graph.hpp"

#include <algorithm>
#include <numeric>

namespace fillorder {

StaticGraph::StaticGraph(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edges) {
  std::vector<std::size_t> deg(n + 1, 0);
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) throw InvalidArgument("edge endpoint out of range");
    if (u == v) continue;
    ++deg[u];
    ++deg[v];
  }
  std::vector<std::size_t> pos(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) pos[i + 1] = pos[i] + deg[i];
  std::vector<Vertex> raw(pos[n]);
  std::vector<std::size_t> fillp(pos.begin(), pos.end() - 1);
  for (auto [u, v] : edges) {
    if (u == v) continue;
    raw[fillp[u]++] = v;
    raw[fillp[v]++] = u;
  }
  offsets_.assign(n + 1, 0);
  adj_.reserve(raw.size());
  for (std::size_t i = 0; i < n; ++i) {
    auto b = raw.begin() + static_cast<std::ptrdiff_t>(pos[i]);
    auto e = raw.begin() + static_cast<std::ptrdiff_t>(pos[i + 1]);
    std::sort(b, e);
    e = std::unique(b, e);
    adj_.insert(adj_.end(), b, e);
    offsets_[i + 1] = adj_.size();
  }
  labels_.resize(n);
  std::iota(labels_.begin(), labels_.end(), std::int64_t{0});
}

bool StaticGraph::has_edge(Vertex u, Vertex v) const {
  auto a = adj(u);
  return std::binary_search(a.begin(), a.end(), v);
}

std::size_t StaticGraph::max_degree() const {
  std::size_t d = 0;
  for (Vertex v = 0; v < n(); ++v) d = std::max(d, degree(v));
  return d;
}

std::size_t StaticGraph::min_degree() const {
  if (n() == 0) return 0;
  std::size_t d = degree(0);
  for (Vertex v = 1; v < n(); ++v) d = std::min(d, degree(v));
  return d;
}

std::vector<std::pair<Vertex, Vertex>> StaticGraph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  out.reserve(m());
  for (Vertex u = 0; u < n(); ++u)
    for (Vertex v : adj(u))
      if (u < v) out.emplace_back(u, v);
  return out;
}

bool is_permutation_of_n(std::span<const Vertex> order, std::size_t n) {
  if (order.size() != n) return false;
  std::vector<char> seen(n, 0);
  for (Vertex v : order) {
    if (v >= n || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

}  // namespace fillorder
