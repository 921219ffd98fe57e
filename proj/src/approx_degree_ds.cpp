#include "fillorder/approx_degree_ds.hpp"

#include <algorithm>
#include <cmath>

namespace fillorder {

double key_to_real(std::uint64_t k) { return std::ldexp(static_cast<double>(k) + 0.5, -64); }

std::size_t approx_sketch_count(std::size_t n, double epsilon) {
  return 50 * static_cast<std::size_t>(std::ceil(ceil_log2(n) / (epsilon * epsilon)));
}

ApproxDegreeDS::ApproxDegreeDS(const StaticGraph& g, std::uint64_t seed, ApproxDegreeOptions opts)
    : eps_(std::min(opts.epsilon, 0.5)),
      bank_(g, seed,
            opts.sketch_count ? opts.sketch_count : approx_sketch_count(g.n(), std::min(opts.epsilon, 0.5)),
            opts.label),
      values_(g.n()),
      q_(g.n(), 0),
      dirty_stamp_(g.n(), 0) {
  if (!(opts.epsilon > 0)) throw InvalidArgument("ApproxDegreeDS: epsilon must be positive");
  const std::size_t k = bank_.size();
  rank_ = std::clamp<std::size_t>(static_cast<std::size_t>(std::floor(k * (1.0 - 1.0 / std::exp(1.0)))), 1, k);
  const std::size_t b = static_cast<std::size_t>(std::ceil(std::log(4.0 * std::max<std::size_t>(g.n(), 1)) / std::log1p(eps_)));
  counts_.assign(b + 1, 0);
  minimizer_.resize(k);
  for (std::size_t i = 0; i < k; ++i) {
    const SketchCopy& s = bank_.copy(i);
    minimizer_[i].resize(g.n());
    for (Vertex u = 0; u < g.n(); ++u) {
      Vertex m = s.query_min(u);
      minimizer_[i][u] = m;
      values_[u].insert({s.key(m), static_cast<std::uint32_t>(i)});
    }
  }
  for (Vertex u = 0; u < g.n(); ++u) {
    q_[u] = values_[u].select(rank_ - 1).first;
    index_.insert({q_[u], u});
    ++counts_[bucket_index(q_[u])];
  }
}

std::size_t ApproxDegreeDS::bucket_index(std::uint64_t q) const {
  double x = -std::log(key_to_real(q)) / std::log1p(eps_);
  if (!(x > 0)) return 0;
  return std::min(static_cast<std::size_t>(std::floor(x)), counts_.size() - 1);
}

std::pair<double, double> ApproxDegreeDS::bucket_range(std::size_t i) const {
  return {std::pow(1 + eps_, static_cast<double>(i)), std::pow(1 + eps_, static_cast<double>(i + 1))};
}

double ApproxDegreeDS::quantile(Vertex u) const {
  if (u >= q_.size() || !graph().is_remaining(u)) throw InvalidArgument("quantile: vertex is not remaining");
  return key_to_real(q_[u]);
}

void ApproxDegreeDS::refresh(Vertex u) {
  std::uint64_t q = values_[u].select(rank_ - 1).first;
  if (q == q_[u]) return;
  index_.erase({q_[u], u});
  --counts_[bucket_index(q_[u])];
  q_[u] = q;
  index_.insert({q, u});
  ++counts_[bucket_index(q)];
}

void ApproxDegreeDS::pivot(Vertex u) {
  if (u >= q_.size() || !graph().is_remaining(u)) throw InvalidArgument("pivot: vertex is not remaining");
  bank_.pivot(u);
  index_.erase({q_[u], u});
  --counts_[bucket_index(q_[u])];
  values_[u].clear();
  ++epoch_;
  std::vector<Vertex> dirty;
  for (std::size_t i = 0; i < bank_.size(); ++i) {
    const SketchCopy& s = bank_.copy(i);
    for (Vertex y : s.changed()) {
      Vertex now = s.query_min(y);
      Vertex& was = minimizer_[i][y];
      values_[y].erase({s.key(was), static_cast<std::uint32_t>(i)});
      values_[y].insert({s.key(now), static_cast<std::uint32_t>(i)});
      multiset_updates_ += 2;
      was = now;
      if (dirty_stamp_[y] != epoch_) {
        dirty_stamp_[y] = epoch_;
        dirty.push_back(y);
      }
    }
  }
  for (Vertex y : dirty) refresh(y);
}

ApproxDegreeDS::Report ApproxDegreeDS::report() const {
  if (index_.empty()) throw InvalidArgument("report: no remaining vertices");
  Report r;
  r.buckets.resize(counts_.size());
  std::size_t pos = 0;
  bool found = false;
  for (std::size_t i = 0; i < counts_.size(); ++i) {
    r.buckets[i] = Bucket(&index_, pos, pos + counts_[i]);
    if (!found && counts_[i]) {
      r.first_nonempty = i;
      found = true;
    }
    pos += counts_[i];
  }
  return r;
}

}  // namespace fillorder
