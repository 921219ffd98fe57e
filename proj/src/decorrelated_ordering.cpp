#include "fillorder/decorrelated_ordering.hpp"

#include <algorithm>
#include <chrono>

#include "fillorder/local_estimator.hpp"

namespace fillorder {

DecayParameters make_decay_parameters(std::size_t n, double epsilon, int c3, double c2) {
  if (!(epsilon > 0 && epsilon <= 0.5)) throw InvalidArgument("epsilon must lie in (0, 1/2]");
  if (c3 < 0 || !(c2 >= 0)) throw InvalidArgument("trim exponent and window must be nonnegative");
  DecayParameters p;
  p.epsilon = epsilon;
  if (c3 > 0) p.c3 = c3;
  if (c2 > 0) p.c2 = c2;
  p.eps_hat = std::min(epsilon / (p.c1 * ceil_log2(n)), 1.0 / 64.0);
  if (std::pow(1 + p.eps_hat, p.c3) > 1 + p.c2 * p.eps_hat)
    throw std::logic_error("decay parameters violate (1 + eps_hat)^c3 <= 1 + c2 eps_hat");
  return p;
}

double sample_max_exponential(std::size_t k, Rng& rng) {
  // x = -ln(1 - U^(1/k)), written to stay accurate for large k.
  double u = rng.uniform_open01();
  return -std::log(-std::expm1(std::log(u) / static_cast<double>(k)));
}

DecreasingExponentials::DecreasingExponentials(std::size_t k, double c2, Rng& rng)
    : k_(k), c2_(c2), rng_(&rng) {
  if (k < 1) throw InvalidArgument("DecreasingExponentials: k must be at least 1");
}

bool DecreasingExponentials::next(double& x) {
  if (done_) return false;
  if (produced_ == 0) {
    top_ = cur_ = sample_max_exponential(k_, *rng_);
  } else {
    if (produced_ >= k_) {
      done_ = true;
      return false;
    }
    cur_ -= rng_->exponential(static_cast<double>(produced_));
    if (cur_ < top_ - c2_) {
      done_ = true;
      return false;
    }
  }
  ++produced_;
  x = cur_;
  return true;
}

std::vector<double> sample_decreasing_exponentials(std::size_t k, double c2, Rng& rng) {
  DecreasingExponentials xs(k, c2, rng);
  std::vector<double> out;
  double x;
  while (xs.next(x)) out.push_back(x);
  return out;
}

std::size_t SparseShuffle::next(Rng& rng) {
  if (drawn_ >= size_) throw std::logic_error("SparseShuffle exhausted");
  std::size_t j = drawn_ + rng.uniform_index(size_ - drawn_);
  std::size_t vj = at(j), vi = at(drawn_);
  swapped_[j] = vi;
  swapped_.erase(drawn_);
  ++drawn_;
  return vj;
}

StepCandidates step_candidates(const ApproxDegreeDS::Report& rep, const DecayParameters& p,
                               std::uint64_t step_seed, bool exhaustive) {
  StepCandidates out;
  const double step = 1 + p.eps_hat;
  if (!rep.buckets.empty()) {
    Rng rng(derive_seed(step_seed, "bucket", 0));
    const auto& b0 = rep.buckets[0];
    for (std::size_t i = 0; i < b0.size(); ++i) {
      double d = p.eps_hat * rng.exponential();
      out.survivors.push_back({{d, b0[i], 0}, 1 - d});
      ++out.bucket_zero;
    }
  }

  struct Top {
    std::size_t bucket;
    double xmax;
    Rng rng;
  };
  std::vector<Top> tops;
  double best = std::numeric_limits<double>::infinity();
  for (const ScoredCandidate& s : out.survivors) best = std::min(best, s.value);
  for (std::size_t i = std::max<std::size_t>(rep.first_nonempty, 1); i < rep.buckets.size(); ++i) {
    if (rep.buckets[i].empty()) continue;
    ++out.buckets_scanned;
    Rng rng(derive_seed(step_seed, "bucket", i));
    double x = sample_max_exponential(rep.buckets[i].size(), rng);
    best = std::min(best, (1 - p.eps_hat * x) * std::pow(step, static_cast<double>(i)));
    tops.push_back({i, x, rng});
  }
  out.threshold = exhaustive ? std::numeric_limits<double>::infinity() : std::pow(step, p.c3) * best;

  for (Top& top : tops) {
    const auto& bucket = rep.buckets[top.bucket];
    const double scale = std::pow(step, static_cast<double>(top.bucket));
    auto value = [&](double x) { return (1 - p.eps_hat * x) * scale; };
    if (value(top.xmax) > out.threshold) continue;
    SparseShuffle pick(bucket.size());
    double x = top.xmax;
    for (std::size_t produced = 1;; ++produced) {
      double d = p.eps_hat * x;
      out.survivors.push_back({{d, bucket[pick.next(top.rng)], top.bucket}, value(x)});
      if (produced >= bucket.size()) break;
      x -= top.rng.exponential(static_cast<double>(produced));
      if (!exhaustive && (x < top.xmax - p.c2 || value(x) > out.threshold)) break;
    }
  }
  std::erase_if(out.survivors, [&](const ScoredCandidate& s) { return s.value > out.threshold; });
  return out;
}

OrderingResult approx_min_degree_sequence(const StaticGraph& g, std::uint64_t seed,
                                          const ApproxOrderingOptions& opts) {
  if (g.n() == 0) throw InvalidArgument("empty graph");
  auto t0 = std::chrono::steady_clock::now();
  const DecayParameters p = make_decay_parameters(g.n(), opts.epsilon, opts.trim_exponent, opts.window);
  const double est_eps = opts.estimator_epsilon > 0 ? opts.estimator_epsilon : p.eps_hat;

  ApproxDegreeOptions dso;
  dso.epsilon = p.eps_hat;
  dso.sketch_count = opts.sketch_count;
  ApproxDegreeDS ds(g, derive_seed(seed, "sketches"), dso);
  const ComponentGraph& cg = ds.graph();
  OrderingResult res;
  res.algorithm = "approx";
  res.seed = seed;
  std::uint64_t candidates_total = 0, estimator_calls = 0, buckets_scanned = 0, bucket_zero = 0;
  EstimatorStats est_stats;

  for (std::size_t t = 0; t < g.n(); ++t) {
    StepCandidates step_c = step_candidates(ds.report(), p, derive_seed(seed, "decay", t));
    const std::vector<ScoredCandidate>& scored = step_c.survivors;
    buckets_scanned += step_c.buckets_scanned;
    bucket_zero += step_c.bucket_zero;
    candidates_total += scored.size();

    Vertex chosen = kNoVertex;
    double chosen_value = 0, chosen_est = 0;
    for (std::size_t c = 0; c < scored.size(); ++c) {
      Rng est_rng(derive_seed(seed, "estimate", t * 0x100000000ULL + c));
      double est = estimate_fill_1degree(cg, scored[c].c.vertex, est_eps, est_rng, &est_stats);
      ++estimator_calls;
      double v = (1 - scored[c].c.delta) * est;
      if (chosen == kNoVertex || v < chosen_value || (v == chosen_value && scored[c].c.vertex < chosen)) {
        chosen = scored[c].c.vertex;
        chosen_value = v;
        chosen_est = est;
      }
    }
    res.order.push_back(chosen);
    res.reported_degree.push_back(std::max<std::int64_t>(0, std::llround(chosen_est) - 1));
    ds.pivot(chosen);
  }

  SketchCounters sc = ds.sketch_counters();
  res.counters["sketch_copies"] = ds.sketch_count();
  res.counters["buckets"] = ds.num_buckets();
  res.counters["candidates"] = candidates_total;
  res.counters["bucket_zero_candidates"] = bucket_zero;
  res.counters["buckets_scanned"] = buckets_scanned;
  res.counters["estimator_calls"] = estimator_calls;
  res.counters["estimator_draws"] = est_stats.draws;
  res.counters["oracle_queries"] = est_stats.oracle_queries;
  res.counters["row_samples"] = est_stats.row_samples;
  res.counters["multiset_updates"] = ds.multiset_updates();
  res.counters["changed_total"] = sc.changed;
  res.counters["structure_updates"] = sc.structure_updates();
  res.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return res;
}

}  // namespace fillorder
