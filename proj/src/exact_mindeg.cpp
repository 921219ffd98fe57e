#include "fillorder/exact_mindeg.hpp"

#include <algorithm>
#include <chrono>

namespace fillorder {

void MinimizerTable::reindex(Vertex u, std::size_t before) {
  std::size_t after = per_vertex_[u].size();
  if (after == before) return;
  index_.erase({before, u});
  index_.insert({after, u});
}

void MinimizerTable::add(Vertex u, Vertex minimizer) {
  std::size_t before = per_vertex_[u].size();
  if (before == 0) index_.insert({0, u});
  ++per_vertex_[u][minimizer];
  reindex(u, before);
}

void MinimizerTable::remove(Vertex u, Vertex minimizer) {
  std::size_t before = per_vertex_[u].size();
  auto it = per_vertex_[u].find(minimizer);
  if (it == per_vertex_[u].end()) throw std::logic_error("MinimizerTable: missing minimizer");
  if (--it->second == 0) per_vertex_[u].erase(it);
  reindex(u, before);
}

void MinimizerTable::drop_vertex(Vertex u) {
  index_.erase({per_vertex_[u].size(), u});
  per_vertex_[u].clear();
}

std::size_t delta_capped_sketch_count(std::size_t n, std::size_t delta) {
  return 10 * (delta + 1) * ceil_log2(n);
}

namespace {

// Sketch bank plus the minimizer bookkeeping shared by both exact drivers.
class ExactState {
 public:
  ExactState(const StaticGraph& g, std::uint64_t seed, std::size_t k)
      : n_(g.n()), bank_(g, seed, k), table_(g.n()) {
    minimizer_.reserve(k);
    for (std::size_t i = 0; i < k; ++i) track_copy(i);
  }

  std::size_t copies() const { return bank_.size(); }
  const MinimizerTable& table() const { return table_; }

  void grow_to(std::size_t k) {
    if (k <= bank_.size()) return;
    std::size_t first = bank_.add_copies(k - bank_.size());
    for (std::size_t i = first; i < k; ++i) track_copy(i);
  }

  void pivot(Vertex u) {
    bank_.pivot(u);
    table_.drop_vertex(u);
    for (std::size_t i = 0; i < bank_.size(); ++i) {
      const SketchCopy& s = bank_.copy(i);
      auto& mins = minimizer_[i];
      for (Vertex y : s.changed()) {
        Vertex now = s.query_min(y);
        table_.remove(y, mins[y]);
        table_.add(y, now);
        mins[y] = now;
      }
    }
  }

  void fill_counters(OrderingResult& res) const {
    SketchCounters c = bank_.total_counters();
    res.counters["sketch_copies"] = bank_.size();
    res.counters["changed_total"] = c.changed;
    res.counters["structure_updates"] = c.structure_updates();
    res.counters["informs"] = c.informs;
    res.counters["melds"] = c.melds;
    res.counters["relabels"] = c.relabels;
  }

 private:
  void track_copy(std::size_t i) {
    const SketchCopy& s = bank_.copy(i);
    std::vector<Vertex> mins(n_, kNoVertex);
    for (Vertex u : bank_.graph().remaining_vertices()) {
      mins[u] = s.query_min(u);
      table_.add(u, mins[u]);
    }
    minimizer_.push_back(std::move(mins));
  }

  std::size_t n_;
  SketchBank bank_;
  MinimizerTable table_;
  std::vector<std::vector<Vertex>> minimizer_;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

OrderingResult delta_capped_min_degree(const StaticGraph& g, std::size_t delta, std::uint64_t seed) {
  if (delta < 1) throw InvalidArgument("delta must be at least 1");
  if (g.n() == 0) throw InvalidArgument("empty graph");
  auto t0 = std::chrono::steady_clock::now();
  OrderingResult res;
  res.algorithm = "delta-capped";
  res.seed = seed;
  ExactState st(g, seed, delta_capped_sketch_count(g.n(), delta));
  while (!st.table().empty()) {
    auto [distinct, u] = st.table().front();
    res.order.push_back(u);
    res.reported_degree.push_back(static_cast<std::int64_t>(distinct) - 1);
    st.pivot(u);
  }
  st.fill_counters(res);
  res.counters["delta"] = delta;
  res.wall_time = seconds_since(t0);
  return res;
}

OrderingResult output_sensitive_min_degree(const StaticGraph& g, std::uint64_t seed) {
  if (g.n() == 0) throw InvalidArgument("empty graph");
  auto t0 = std::chrono::steady_clock::now();
  OrderingResult res;
  res.algorithm = "output-sensitive";
  res.seed = seed;
  const std::size_t logn = ceil_log2(g.n());
  std::size_t c = std::max<std::size_t>(1, g.min_degree());
  ExactState st(g, seed, 10 * c * logn);
  std::uint64_t doublings = 0;
  while (!st.table().empty()) {
    auto [distinct, u] = st.table().front();
    while (2 * (distinct - 1) > c) {
      c *= 2;
      ++doublings;
      st.grow_to(10 * c * logn);
      std::tie(distinct, u) = st.table().front();
    }
    res.order.push_back(u);
    res.reported_degree.push_back(static_cast<std::int64_t>(distinct) - 1);
    st.pivot(u);
  }
  st.fill_counters(res);
  res.counters["final_c"] = c;
  res.counters["doublings"] = doublings;
  res.wall_time = seconds_since(t0);
  return res;
}

}  // namespace fillorder
