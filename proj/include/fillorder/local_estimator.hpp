#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "fillorder/component_graph.hpp"
#include "fillorder/rng.hpp"

namespace fillorder {

inline constexpr std::uint64_t kMaxMeanDraws = 10'000'000'000ULL;

struct EstimatorStats {
  std::uint64_t draws = 0;           // samples taken by estimate_mean
  std::uint64_t oracle_queries = 0;  // query_value calls
  std::uint64_t row_samples = 0;     // sample_from_row calls
  std::uint64_t row_sizes = 0;       // row_size calls
};

// Draws from `draw(rng)` (values in [0, 1]) until their sum reaches sigma and
// returns sigma / (number of draws). sigma is rounded up to an integer so a
// constant-1 distribution comes out exactly 1.
template <class Draw>
double estimate_mean(Draw&& draw, double sigma, Rng& rng, EstimatorStats* stats = nullptr,
                     std::uint64_t max_draws = kMaxMeanDraws) {
  if (!(sigma > 0)) throw InvalidArgument("estimate_mean: sigma must be positive");
  sigma = std::ceil(sigma);
  // Compensated sum; the slack absorbs the last rounding error so that draws
  // like 1/lim add up to sigma after exactly sigma * lim steps.
  const double target = sigma * (1 - 1e-12);
  double sum = 0, comp = 0;
  std::uint64_t counter = 0;
  while (sum + comp < target) {
    if (counter >= max_draws)
      throw EstimatorDiverged("estimate_mean: draw budget exhausted (mean is zero or nearly so)");
    double x = draw(rng);
    if (!(x >= 0.0 && x <= 1.0)) throw std::domain_error("estimate_mean: sample outside [0, 1]");
    double t = sum + x;
    comp += std::abs(sum) >= x ? (sum - t) + x : (x - t) + sum;
    sum = t;
    ++counter;
  }
  if (stats) stats->draws += counter;
  return sigma / static_cast<double>(counter);
}

// A 0/1 matrix given by its nonzero pattern, one sorted row per entry.
class ExplicitMatrix {
 public:
  ExplicitMatrix(std::size_t n_cols, std::vector<std::vector<Vertex>> rows);

  std::size_t rows() const { return rows_.size(); }
  std::size_t universe() const { return n_cols_; }
  std::size_t row_size(std::size_t i) const { return rows_[i].size(); }
  Vertex sample_from_row(std::size_t i, Rng& rng) const { return rows_[i][rng.uniform_index(rows_[i].size())]; }
  bool query_value(std::size_t i, Vertex j) const {
    return std::binary_search(rows_[i].begin(), rows_[i].end(), j);
  }

  std::size_t nonzero_columns() const;
  std::size_t column_sum(Vertex j) const;

 private:
  std::size_t n_cols_;
  std::vector<std::vector<Vertex>> rows_;
};

// Rows of the matrix whose nonzero columns are u's closed fill neighborhood:
// row 0 is {u} plus the remaining neighbors of u, then one row Nrem(x) per
// component neighbor x of u in id order. Nothing is materialized beyond the
// list of component neighbors.
class FillNeighborhoodMatrix {
 public:
  FillNeighborhoodMatrix(const ComponentGraph& g, Vertex u);

  std::size_t rows() const { return 1 + comps_.size(); }
  std::size_t universe() const { return g_->n(); }
  std::size_t row_size(std::size_t i) const {
    return i == 0 ? 1 + g_->remaining_degree(u_) : g_->remaining_degree(comps_[i - 1]);
  }
  Vertex sample_from_row(std::size_t i, Rng& rng) const;
  bool query_value(std::size_t i, Vertex j) const {
    if (i == 0) return j == u_ || g_->remaining_neighbors(u_).contains(j);
    return g_->remaining_neighbors(comps_[i - 1]).contains(j);
  }

 private:
  const ComponentGraph* g_;
  Vertex u_;
  std::vector<Vertex> comps_;
};

namespace detail {

// Picks a uniformly random nonzero (row, column): row with probability
// proportional to its size, then a uniform entry of the row.
template <class Oracle>
class NonzeroSampler {
 public:
  NonzeroSampler(const Oracle& a, EstimatorStats& stats) : a_(a), stats_(stats), prefix_(a.rows() + 1, 0) {
    for (std::size_t i = 0; i < a.rows(); ++i) prefix_[i + 1] = prefix_[i] + a.row_size(i);
    stats_.row_sizes += a.rows();
  }
  std::uint64_t nnz() const { return prefix_.back(); }
  std::pair<std::size_t, Vertex> operator()(Rng& rng) const {
    std::uint64_t t = rng.uniform_index(nnz());
    std::size_t i = static_cast<std::size_t>(std::upper_bound(prefix_.begin(), prefix_.end(), t) - prefix_.begin()) - 1;
    ++stats_.row_samples;
    return {i, a_.sample_from_row(i, rng)};
  }

 private:
  const Oracle& a_;
  EstimatorStats& stats_;
  std::vector<std::uint64_t> prefix_;
};

}  // namespace detail

// Estimates the number of ones in column j: r times the estimated mean of
// A(row, j) over a uniform row.
template <class Oracle>
double approx_column_sum(const Oracle& a, Vertex j, double eps, double delta, Rng& rng,
                         EstimatorStats* stats = nullptr) {
  if (!(eps > 0) || !(delta > 0 && delta < 1)) throw InvalidArgument("approx_column_sum: bad eps or delta");
  EstimatorStats local;
  EstimatorStats& st = stats ? *stats : local;
  const double sigma = 5.0 / (eps * eps) * std::log(1.0 / delta);
  const std::size_t r = a.rows();
  auto draw = [&](Rng& g) {
    ++st.oracle_queries;
    return a.query_value(g.uniform_index(r), j) ? 1.0 : 0.0;
  };
  return static_cast<double>(r) * estimate_mean(draw, sigma, rng, &st);
}

// Number of nonzero columns: nnz times the mean of 1 / (column sum) over a
// uniformly random nonzero, with column sums estimated once per column.
template <class Oracle>
double estimate_nonzero_columns_slow(const Oracle& a, double eps, Rng& rng, EstimatorStats* stats = nullptr) {
  if (!(eps > 0)) throw InvalidArgument("estimate_nonzero_columns_slow: eps must be positive");
  EstimatorStats local;
  EstimatorStats& st = stats ? *stats : local;
  detail::NonzeroSampler<Oracle> pick(a, st);
  if (pick.nnz() == 0) throw InvalidArgument("estimate_nonzero_columns_slow: empty matrix");
  const double n = static_cast<double>(std::max<std::size_t>(a.universe(), 2));
  const double logn = ceil_log2(a.universe());
  const double delta = std::pow(n, -10.0);
  const double sigma = 50.0 / (eps * eps) * logn;
  std::unordered_map<Vertex, double> memo;
  auto draw = [&](Rng& g) {
    Vertex j = pick(g).second;
    auto it = memo.find(j);
    if (it == memo.end()) it = memo.emplace(j, approx_column_sum(a, j, eps, delta, g, &st)).first;
    // A sampled column holds at least one nonzero, so its sum is at least 1.
    return std::min(1.0, 1.0 / it->second);
  };
  return static_cast<double>(pick.nnz()) * estimate_mean(draw, sigma, rng, &st);
}

// Number of nonzero columns via truncated geometric probing: for a uniform
// nonzero (i, j), count uniform row probes until one hits column j.
template <class Oracle>
double estimate_nonzero_columns(const Oracle& a, double eps, Rng& rng, EstimatorStats* stats = nullptr) {
  if (!(eps > 0)) throw InvalidArgument("estimate_nonzero_columns: eps must be positive");
  EstimatorStats local;
  EstimatorStats& st = stats ? *stats : local;
  detail::NonzeroSampler<Oracle> pick(a, st);
  if (pick.nnz() == 0) throw InvalidArgument("estimate_nonzero_columns: empty matrix");
  const std::size_t r = a.rows();
  const double logn = ceil_log2(a.universe());
  const std::uint64_t lim = 10 * static_cast<std::uint64_t>(r) * static_cast<std::uint64_t>(logn);
  const double sigma = 5.0 / (eps * eps) * logn;
  auto draw = [&](Rng& g) {
    Vertex j = pick(g).second;
    std::uint64_t counter = 0;
    while (counter < lim) {
      ++counter;
      ++st.oracle_queries;
      if (a.query_value(g.uniform_index(r), j)) break;
    }
    return static_cast<double>(counter) / static_cast<double>(lim);
  };
  double mean = estimate_mean(draw, sigma, rng, &st);
  return static_cast<double>(pick.nnz()) * static_cast<double>(lim) / static_cast<double>(r) * mean;
}

// Estimate of deg(u) + 1 in the current fill graph.
double estimate_fill_1degree(const ComponentGraph& g, Vertex u, double eps, Rng& rng,
                             EstimatorStats* stats = nullptr);

}  // namespace fillorder
