#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "fillorder/component_graph.hpp"

namespace fillorder {

struct SketchCounters {
  std::uint64_t pivots = 0;
  std::uint64_t changed = 0;         // total ChangedList length
  std::uint64_t fill_updates = 0;    // inserts, deletes and value replacements in fill maps
  std::uint64_t heap_pushes = 0;     // elements pushed into remaining heaps, merges included
  std::uint64_t melds = 0;
  std::uint64_t informs = 0;         // fill entries rewritten by inform_remaining
  std::uint64_t relabels = 0;        // fill entries renamed or dropped when components merge
  std::uint64_t rescans = 0;         // fill-map minimum recomputations

  std::uint64_t structure_updates() const { return fill_updates + heap_pushes; }
  SketchCounters& operator+=(const SketchCounters& o);
};

// Offsets of each vertex's fill map inside the flat per-copy arrays. A fill
// map of u never holds more than deg(u) + 1 entries: every component neighbor
// of u contains a distinct original neighbor of u.
struct FillLayout {
  explicit FillLayout(const StaticGraph& g);
  std::vector<std::size_t> offset;  // size n + 1
};

// One l0-sketch: a random key per vertex and, for every remaining vertex u,
// the vertex of minimum key over u's closed fill neighborhood. Updated
// through the ComponentGraph pivot hooks.
class SketchCopy {
 public:
  // g must not have been pivoted yet.
  SketchCopy(const ComponentGraph& g, std::shared_ptr<const FillLayout> layout, std::uint64_t seed);
  // Explicit keys, one per vertex.
  SketchCopy(const ComponentGraph& g, std::shared_ptr<const FillLayout> layout,
             std::vector<std::uint64_t> keys);

  std::uint64_t key(Vertex v) const { return keys_[v]; }
  // Key as a real in (0, 1).
  double key_real(Vertex v) const;
  bool key_less(Vertex a, Vertex b) const {
    return keys_[a] < keys_[b] || (keys_[a] == keys_[b] && a < b);
  }

  Vertex query_min(Vertex u) const { return min_[u]; }

  // Pivot hooks; see ComponentGraph::pivot.
  void before_detach(const ComponentGraph& g, Vertex v);
  void before_meld(const ComponentGraph& g, Vertex v, Vertex a, Vertex b, Vertex keep);
  void after_pivot(const ComponentGraph& g, Vertex v, Vertex x);

  // Remaining vertices whose minimizer changed during the last pivot.
  const std::vector<Vertex>& changed() const { return changed_; }
  const SketchCounters& counters() const { return counters_; }

  // Number of entries in u's fill map and the contributor ids (for tests).
  std::vector<std::pair<Vertex, Vertex>> fill_entries(Vertex u) const;
  // Logical content of remaining[x]: distinct live entries, sorted.
  std::vector<Vertex> remaining_content(const ComponentGraph& g, Vertex x) const;

 private:
  Vertex* contrib(Vertex u) { return contrib_.data() + layout_->offset[u]; }
  Vertex* value(Vertex u) { return value_.data() + layout_->offset[u]; }
  const Vertex* contrib(Vertex u) const { return contrib_.data() + layout_->offset[u]; }
  const Vertex* value(Vertex u) const { return value_.data() + layout_->offset[u]; }
  std::size_t find(Vertex u, Vertex c) const;
  void erase_at(Vertex u, std::size_t i);
  void insert(Vertex u, Vertex c, Vertex val);
  void set_value(Vertex u, std::size_t i, Vertex val);
  void init(const ComponentGraph& g);
  void recompute_min(Vertex u);
  void flag(Vertex u, Vertex old_min);

  Vertex heap_min(const ComponentGraph& g, Vertex x, bool allow_pivot);
  void heap_push(Vertex x, Vertex y);
  void inform_remaining(const ComponentGraph& g, Vertex w, Vertex old_val, Vertex new_val);

  std::shared_ptr<const FillLayout> layout_;
  std::vector<std::uint64_t> keys_;
  std::vector<Vertex> contrib_, value_;
  std::vector<std::uint32_t> size_;
  std::vector<Vertex> min_;
  std::vector<std::vector<Vertex>> heap_;

  Vertex pivot_ = kNoVertex;
  std::uint32_t epoch_ = 0;
  std::vector<std::uint32_t> stamp_;
  std::vector<Vertex> first_min_;
  std::vector<Vertex> touched_;
  std::vector<Vertex> changed_;
  SketchCounters counters_;
};

// A single sketch copy together with the component graph it follows.
class DynamicSketch {
 public:
  DynamicSketch(const StaticGraph& g, std::uint64_t seed);
  DynamicSketch(const StaticGraph& g, std::vector<std::uint64_t> keys);

  const ComponentGraph& graph() const { return graph_; }
  const SketchCopy& sketch() const { return sketch_; }
  Vertex query_min(Vertex u) const;
  // Returns the ChangedList of the pivot.
  const std::vector<Vertex>& pivot_vertex(Vertex v);

 private:
  ComponentGraph graph_;
  SketchCopy sketch_;
};

// k independent sketch copies sharing one component graph. Copy i draws its
// keys from the stream (seed, label, i), so adding copies later does not
// disturb existing ones.
class SketchBank {
 public:
  SketchBank(const StaticGraph& g, std::uint64_t seed, std::size_t k, std::string label = "sketch");

  const ComponentGraph& graph() const { return graph_; }
  std::size_t size() const { return copies_.size(); }
  const SketchCopy& copy(std::size_t i) const { return copies_[i]; }

  void pivot(Vertex v);
  // Adds copies and brings them to the current state by replaying the pivot
  // history. Returns the index of the first new copy.
  std::size_t add_copies(std::size_t count);

  SketchCounters total_counters() const;

 private:
  const StaticGraph* g_;
  std::uint64_t seed_;
  std::string label_;
  std::shared_ptr<const FillLayout> layout_;
  ComponentGraph graph_;
  std::vector<SketchCopy> copies_;
};

}  // namespace fillorder
