#include "fillorder/component_graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace fillorder {

ComponentGraph::ComponentGraph(const StaticGraph& g)
    : g_(&g), remaining_(g.n(), 1), parent_(g.n()), nrem_(g.n()), ncomp_(g.n()) {
  for (Vertex v = 0; v < g.n(); ++v) {
    parent_[v] = v;
    remaining_set_.insert(v);
    for (Vertex u : g.adj(v)) nrem_[v].insert(u);
  }
}

VertexState ComponentGraph::state(Vertex v) const {
  if (v >= n()) throw InvalidArgument("vertex out of range");
  if (is_remaining(v)) return {};
  return {false, component_of(v)};
}

Vertex ComponentGraph::component_of(Vertex v) const {
  Vertex r = v;
  while (parent_[r] != r) r = parent_[r];
  while (parent_[v] != r) {
    Vertex next = parent_[v];
    parent_[v] = r;
    v = next;
  }
  return r;
}

std::vector<Vertex> ComponentGraph::fill_neighborhood(Vertex v) const {
  if (!is_remaining(v)) throw InvalidArgument("fill_neighborhood: vertex is not remaining");
  std::vector<Vertex> out(nrem_[v].begin(), nrem_[v].end());
  for (Vertex x : ncomp_[v]) out.insert(out.end(), nrem_[x].begin(), nrem_[x].end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  out.erase(std::remove(out.begin(), out.end(), v), out.end());
  return out;
}

Vertex ComponentGraph::sample_remaining_neighbor(Vertex x, Rng& rng) const {
  const VertexSet& s = nrem_[x];
  if (s.empty()) throw InvalidArgument("sample_remaining_neighbor: empty neighborhood");
  return s.select(rng.uniform_index(s.size()));
}

Vertex ComponentGraph::sample_random_component(Rng& rng) const {
  if (component_set_.empty()) throw InvalidArgument("sample_random_component: no components");
  return component_set_.select(rng.uniform_index(component_set_.size()));
}

Vertex ComponentGraph::sample_random_remaining(Rng& rng) const {
  if (remaining_set_.empty()) throw InvalidArgument("sample_random_remaining: nothing remains");
  return remaining_set_.select(rng.uniform_index(remaining_set_.size()));
}

void ComponentGraph::detach(Vertex v) {
  for (Vertex y : nrem_[v]) {
    nrem_[y].erase(v);
    ncomp_[y].insert(v);
  }
  for (Vertex w : ncomp_[v]) nrem_[w].erase(v);
  ncomp_[v].clear();
  remaining_[v] = 0;
  remaining_set_.erase(v);
  component_set_.insert(v);
}

void ComponentGraph::merge_into(Vertex absorbed, Vertex kept) {
  for (Vertex y : nrem_[absorbed]) {
    ncomp_[y].erase(absorbed);
    if (nrem_[kept].insert(y)) ncomp_[y].insert(kept);
  }
  nrem_[absorbed].clear();
  component_set_.erase(absorbed);
  parent_[absorbed] = kept;
}

void ComponentGraph::check_invariants() const {
  auto fail = [](const std::string& what) { throw std::logic_error("ComponentGraph: " + what); };
  std::size_t endpoints = 0;
  for (Vertex v = 0; v < n(); ++v) {
    if (is_remaining(v)) {
      for (Vertex y : nrem_[v]) {
        if (!is_remaining(y)) fail("remaining neighbor not remaining");
        if (!nrem_[y].contains(v)) fail("asymmetric remaining edge");
      }
      for (Vertex x : ncomp_[v]) {
        if (!is_component(x)) fail("component neighbor is not a component");
        if (!nrem_[x].contains(v)) fail("Ncomp/Nrem mismatch");
      }
      endpoints += nrem_[v].size();
    } else if (is_component(v)) {
      if (!ncomp_[v].empty()) fail("component adjacent to a component");
      for (Vertex y : nrem_[v]) {
        if (!is_remaining(y)) fail("component neighbor not remaining");
        if (!ncomp_[y].contains(v)) fail("Nrem/Ncomp mismatch");
      }
      endpoints += nrem_[v].size();
    } else if (!nrem_[v].empty() || !ncomp_[v].empty()) {
      fail("absorbed vertex still has neighbors");
    }
  }
  if (endpoints > 2 * g_->m()) fail("more stored endpoints than 2m");
}

}  // namespace fillorder
