#pragma once

#include <cstdint>
#include <vector>

#include "fillorder/common.hpp"
#include "fillorder/ordered_set.hpp"
#include "fillorder/rng.hpp"
#include "fillorder/static_graph.hpp"

namespace fillorder {

using VertexSet = OrderedSet<Vertex>;

class ComponentGraph;

struct VertexState {
  bool remaining = true;
  Vertex component = kNoVertex;  // id of the component vertex holding v, if eliminated
};

// Hooks called during ComponentGraph::pivot. Default implementations do nothing.
//  before_detach(g, v)           graph untouched; v still remaining.
//  before_meld(g, v, a, b, keep) v already detached and turned into a component;
//                                a is the component currently holding v, b the
//                                next component neighbor of v (in id order), keep
//                                the id that survives (a or b).
//  after_pivot(g, v, x)          x is the final component containing v.
struct NullPivotObserver {
  void before_detach(const ComponentGraph&, Vertex) {}
  void before_meld(const ComponentGraph&, Vertex, Vertex, Vertex, Vertex) {}
  void after_pivot(const ComponentGraph&, Vertex, Vertex) {}
};

// The partially eliminated graph with every connected set of eliminated
// vertices contracted into one component vertex. A component is identified by
// the id of one of its eliminated vertices. Remaining vertices keep their ids.
class ComponentGraph {
 public:
  // g must outlive this object.
  explicit ComponentGraph(const StaticGraph& g);

  const StaticGraph& origin() const { return *g_; }
  std::size_t n() const { return g_->n(); }

  bool is_remaining(Vertex v) const { return remaining_[v] != 0; }
  bool is_component(Vertex x) const { return !remaining_[x] && parent_[x] == x; }
  VertexState state(Vertex v) const;
  Vertex component_of(Vertex v) const;  // v eliminated

  // For a remaining vertex: its remaining neighbors. For a component: Nrem(x).
  const VertexSet& remaining_neighbors(Vertex v) const { return nrem_[v]; }
  const VertexSet& component_neighbors(Vertex v) const { return ncomp_[v]; }
  std::size_t remaining_degree(Vertex v) const { return nrem_[v].size(); }

  const VertexSet& remaining_vertices() const { return remaining_set_; }
  const VertexSet& component_vertices() const { return component_set_; }
  std::size_t num_remaining() const { return remaining_set_.size(); }

  // Fill neighborhood of a remaining vertex assembled from the component graph.
  std::vector<Vertex> fill_neighborhood(Vertex v) const;
  std::size_t fill_degree(Vertex v) const { return fill_neighborhood(v).size(); }

  Vertex sample_remaining_neighbor(Vertex x, Rng& rng) const;
  Vertex sample_random_component(Rng& rng) const;
  Vertex sample_random_remaining(Rng& rng) const;

  const std::vector<Vertex>& history() const { return history_; }

  void pivot(Vertex v) {
    NullPivotObserver obs;
    pivot(v, obs);
  }

  template <class Observer>
  void pivot(Vertex v, Observer& obs);

  // Checks the structural invariants; throws std::logic_error on violation.
  void check_invariants() const;

 private:
  void detach(Vertex v);
  void merge_into(Vertex absorbed, Vertex kept);

  const StaticGraph* g_;
  std::vector<char> remaining_;
  mutable std::vector<Vertex> parent_;
  std::vector<VertexSet> nrem_;
  std::vector<VertexSet> ncomp_;
  VertexSet remaining_set_;
  VertexSet component_set_;
  std::vector<Vertex> history_;
};

template <class Observer>
void ComponentGraph::pivot(Vertex v, Observer& obs) {
  if (v >= n() || !is_remaining(v)) throw InvalidArgument("pivot: vertex is not remaining");
  obs.before_detach(*this, v);
  std::vector<Vertex> comps(ncomp_[v].begin(), ncomp_[v].end());
  detach(v);
  Vertex cur = v;
  for (Vertex w : comps) {
    Vertex keep = nrem_[w].size() > nrem_[cur].size() ? w : cur;
    obs.before_meld(*this, v, cur, w, keep);
    merge_into(keep == cur ? w : cur, keep);
    cur = keep;
  }
  history_.push_back(v);
  obs.after_pivot(*this, v, cur);
}

}  // namespace fillorder
