#include "fillorder/local_estimator.hpp"

#include <set>

namespace fillorder {

ExplicitMatrix::ExplicitMatrix(std::size_t n_cols, std::vector<std::vector<Vertex>> rows)
    : n_cols_(n_cols), rows_(std::move(rows)) {
  for (auto& r : rows_) {
    std::sort(r.begin(), r.end());
    r.erase(std::unique(r.begin(), r.end()), r.end());
    if (!r.empty() && r.back() >= n_cols_) throw InvalidArgument("ExplicitMatrix: column out of range");
  }
}

std::size_t ExplicitMatrix::nonzero_columns() const {
  std::set<Vertex> cols;
  for (const auto& r : rows_) cols.insert(r.begin(), r.end());
  return cols.size();
}

std::size_t ExplicitMatrix::column_sum(Vertex j) const {
  std::size_t s = 0;
  for (std::size_t i = 0; i < rows_.size(); ++i) s += query_value(i, j);
  return s;
}

FillNeighborhoodMatrix::FillNeighborhoodMatrix(const ComponentGraph& g, Vertex u)
    : g_(&g), u_(u), comps_(g.component_neighbors(u).begin(), g.component_neighbors(u).end()) {
  if (u >= g.n() || !g.is_remaining(u)) throw InvalidArgument("FillNeighborhoodMatrix: vertex is not remaining");
}

Vertex FillNeighborhoodMatrix::sample_from_row(std::size_t i, Rng& rng) const {
  if (i == 0) {
    std::uint64_t t = rng.uniform_index(1 + g_->remaining_degree(u_));
    return t == 0 ? u_ : g_->remaining_neighbors(u_).select(t - 1);
  }
  return g_->sample_remaining_neighbor(comps_[i - 1], rng);
}

double estimate_fill_1degree(const ComponentGraph& g, Vertex u, double eps, Rng& rng, EstimatorStats* stats) {
  FillNeighborhoodMatrix a(g, u);
  return estimate_nonzero_columns(a, eps, rng, stats);
}

}  // namespace fillorder
