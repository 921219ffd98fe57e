// Acceptance driver. Prints one "PASS n: ..." or "FAIL n: ..." line per
// criterion. With arguments, runs only the listed criteria.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "fillorder/approx_degree_ds.hpp"
#include "fillorder/decorrelated_ordering.hpp"
#include "fillorder/dynamic_sketch.hpp"
#include "fillorder/exact_mindeg.hpp"
#include "fillorder/fill_oracle.hpp"
#include "fillorder/generators.hpp"
#include "fillorder/local_estimator.hpp"
#include "stats.hpp"
#include "test_support.hpp"

using namespace fillorder;
using namespace fillorder::testing;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

class Clock {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0_).count();
  }

 private:
  std::chrono::steady_clock::time_point t0_ = std::chrono::steady_clock::now();
};

template <class... Args>
std::string fmt(const char* f, Args... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

double log2d(double x) { return std::log2(x); }

// ------------------------------------------------------------------ 1

// Closed fill neighborhood of u as a bitmask; adj holds one mask per vertex.
std::uint32_t fill_mask(const std::vector<std::uint32_t>& adj, std::uint32_t elim, Vertex u) {
  std::uint32_t seen = adj[u] | (1u << u), frontier = adj[u] & elim;
  while (frontier) {
    Vertex x = static_cast<Vertex>(__builtin_ctz(frontier));
    frontier &= frontier - 1;
    std::uint32_t fresh = adj[x] & ~seen;
    seen |= fresh;
    frontier |= fresh & elim;
  }
  return seen & ~elim;
}

Outcome sketch_exactness() {
  Clock clock;
  std::uint64_t checks = 0, wrong = 0, graphs = 0;
  // Every labeled graph on up to 7 vertices, pivoted in id order. Pivoting G
  // in order pi is pivoting the relabeled graph in id order, and keys are iid,
  // so this covers every (graph, pivot order) pair.
  for (std::size_t n = 1; n <= 7; ++n) {
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (Vertex i = 0; i < n; ++i)
      for (Vertex j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    const std::uint64_t masks = std::uint64_t{1} << pairs.size();
    for (std::uint64_t mask = 0; mask < masks; ++mask) {
      std::vector<std::pair<Vertex, Vertex>> e;
      std::vector<std::uint32_t> adj(n, 0);
      for (std::size_t b = 0; b < pairs.size(); ++b)
        if (mask >> b & 1) {
          e.push_back(pairs[b]);
          adj[pairs[b].first] |= 1u << pairs[b].second;
          adj[pairs[b].second] |= 1u << pairs[b].first;
        }
      StaticGraph g(n, e);
      DynamicSketch ds(g, derive_seed(n, "exhaustive", mask));
      const SketchCopy& s = ds.sketch();
      std::uint32_t elim = 0;
      for (Vertex step = 0; step <= n; ++step) {
        for (Vertex u = 0; u < n; ++u) {
          if (elim >> u & 1) continue;
          std::uint32_t nb = fill_mask(adj, elim, u);
          Vertex best = u;
          for (; nb; nb &= nb - 1) {
            Vertex y = static_cast<Vertex>(__builtin_ctz(nb));
            if (s.key_less(y, best)) best = y;
          }
          ++checks;
          wrong += ds.query_min(u) != best;
        }
        if (step == n) break;
        ds.pivot_vertex(step);
        elim |= 1u << step;
      }
      ++graphs;
    }
  }
  Rng rng(derive_seed(1, "acceptance-sketch"));
  for (int t = 0; t < 100; ++t) {
    StaticGraph g = gnp_graph(40, 0.2, rng);
    DynamicSketch ds(g, rng.next_u64());
    std::vector<char> elim(40, 0);
    auto check = [&] {
      for (Vertex u = 0; u < 40; ++u) {
        if (elim[u]) continue;
        Vertex best = u;
        for (Vertex y : fill_neighborhood_bruteforce(g, elim, u))
          if (ds.sketch().key_less(y, best)) best = y;
        ++checks;
        wrong += ds.query_min(u) != best;
      }
    };
    check();
    for (Vertex v : random_permutation(40, rng)) {
      ds.pivot_vertex(v);
      elim[v] = 1;
      check();
    }
    ++graphs;
  }
  double secs = clock.seconds();
  return {wrong == 0 && secs < 120,
          fmt("%llu graphs, %llu minimizer checks, %llu mismatches, %.1f s (limit 120 s)",
              (unsigned long long)graphs, (unsigned long long)checks, (unsigned long long)wrong, secs)};
}

// ------------------------------------------------------------------ 2

Outcome exact_ordering_equivalence() {
  Clock clock;
  Rng rng(derive_seed(2, "acceptance-exact"));
  int capped = 0, sensitive = 0;
  for (std::uint64_t s = 0; s < 100; ++s) {
    std::size_t n = 2 + rng.uniform_index(29);
    StaticGraph g = gnp_graph(n, 0.05 + 0.45 * rng.uniform01(), rng);
    std::vector<Vertex> ref = exact_mindeg_bruteforce(g).order;
    capped += delta_capped_min_degree(g, n, s).order == ref;
    sensitive += output_sensitive_min_degree(g, s).order == ref;
  }
  double secs = clock.seconds();
  return {capped >= 99 && sensitive >= 99 && secs < 300,
          fmt("delta-capped %d/100, output-sensitive %d/100 runs match brute force, %.1f s (limit 300 s)", capped,
              sensitive, secs)};
}

// ------------------------------------------------------------------ 3

Outcome quantile_accuracy() {
  const double eps = 0.1;
  struct Instance {
    std::string name;
    StaticGraph g;
    std::vector<Vertex> pivots;
  };
  std::vector<Instance> inst;
  inst.push_back({"K41", complete_graph(41), {}});
  {
    Rng rng(derive_seed(3, "acceptance-quantile"));
    StaticGraph g = gnp_graph(50, 0.6, rng);
    std::vector<Vertex> perm = random_permutation(50, rng);
    inst.push_back({"G(50,0.6) after 5 pivots", g, std::vector<Vertex>(perm.begin(), perm.begin() + 5)});
  }
  bool pass = true;
  std::ostringstream out;
  for (const Instance& in : inst) {
    const std::size_t n = in.g.n();
    const std::size_t k = 50 * static_cast<std::size_t>(std::ceil(log2d(double(n)) / (eps * eps)));
    std::vector<char> elim(n, 0);
    for (Vertex v : in.pivots) elim[v] = 1;
    std::vector<std::size_t> deg1(n, 0);
    std::vector<Vertex> tested;
    for (Vertex u = 0; u < n; ++u) {
      if (elim[u]) continue;
      deg1[u] = fill_degree_bruteforce(in.g, elim, u) + 1;
      if (static_cast<double>(deg1[u]) > 2 / eps) tested.push_back(u);
    }
    std::vector<int> good(n, 0);
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      ApproxDegreeOptions o;
      o.epsilon = eps;
      o.sketch_count = k;
      ApproxDegreeDS ds(in.g, derive_seed(seed, "acceptance-quantile"), o);
      for (Vertex v : in.pivots) ds.pivot(v);
      for (Vertex u : tested) {
        double q = ds.quantile(u), d = static_cast<double>(deg1[u]);
        good[u] += q >= (1 - eps) / d && q <= (1 + eps) / d;
      }
    }
    int worst = 100;
    for (Vertex u : tested) worst = std::min(worst, good[u]);
    pass = pass && !tested.empty() && worst >= 95;
    out << in.name << ": k=" << k << ", " << tested.size() << " vertices, worst " << worst << "/100 seeds; ";
  }
  return {pass, out.str()};
}

// ------------------------------------------------------------------ 4

Outcome mean_estimator() {
  const double eps = 0.2, sigma = 5 / (eps * eps) * std::log(100.0);
  bool pass = true;
  std::ostringstream out;
  for (double p : {0.1, 0.5, 0.9}) {
    Rng rng(derive_seed(4, "acceptance-mean", static_cast<std::uint64_t>(p * 10)));
    int ok = 0;
    EstimatorStats st;
    for (int t = 0; t < 1000; ++t) {
      double est = estimate_mean([p](Rng& r) { return r.bernoulli(p) ? 1.0 : 0.0; }, sigma, rng, &st);
      ok += std::abs(est - p) <= eps * p;
    }
    double mean_draws = static_cast<double>(st.draws) / 1000;
    pass = pass && ok >= 980 && mean_draws <= 2 * sigma / p;
    out << fmt("p=%.1f: %d/1000 within eps, mean draws %.0f (limit %.0f); ", p, ok, mean_draws, 2 * sigma / p);
  }
  return {pass, out.str()};
}

// ------------------------------------------------------------------ 5

Outcome nonzero_column_estimators() {
  const double eps = 0.2;
  const std::size_t cols = 50;
  Rng gen(derive_seed(5, "acceptance-matrices"));
  std::vector<std::pair<std::string, ExplicitMatrix>> mats;
  {
    std::vector<std::vector<Vertex>> rows(cols);
    for (Vertex i = 0; i < cols; ++i) rows[i] = {i};
    mats.emplace_back("identity", ExplicitMatrix(cols, rows));
  }
  {
    std::vector<Vertex> row;
    for (Vertex j = 0; j < cols; ++j)
      if (gen.bernoulli(0.5)) row.push_back(j);
    mats.emplace_back("single row", ExplicitMatrix(cols, {row}));
  }
  {
    std::vector<std::vector<Vertex>> rows(cols);
    for (auto& r : rows) {
      for (Vertex j = 0; j < cols; ++j)
        if (gen.bernoulli(0.1)) r.push_back(j);
      if (r.empty()) r.push_back(static_cast<Vertex>(gen.uniform_index(cols)));
    }
    mats.emplace_back("random", ExplicitMatrix(cols, rows));
  }
  bool pass = true;
  std::ostringstream out;
  for (const auto& [name, a] : mats) {
    const double truth = static_cast<double>(a.nonzero_columns());
    const double l = log2d(double(a.universe()));
    const double budget = 100 * static_cast<double>(a.rows()) * l * l / (eps * eps);
    Rng rng(derive_seed(5, name));
    int slow_ok = 0, fast_ok = 0;
    EstimatorStats fast_st;
    for (int t = 0; t < 1000; ++t) {
      double s = estimate_nonzero_columns_slow(a, eps, rng);
      slow_ok += std::abs(s - truth) <= eps * truth;
      double f = estimate_nonzero_columns(a, eps, rng, &fast_st);
      fast_ok += std::abs(f - truth) <= eps * truth;
    }
    double mean_q = static_cast<double>(fast_st.oracle_queries) / 1000;
    pass = pass && slow_ok >= 990 && fast_ok >= 990 && mean_q <= budget;
    out << fmt("%s (%zu rows, %.0f columns): slow %d/1000, fast %d/1000, fast queries %.0f (limit %.0f); ",
               name.c_str(), a.rows(), truth, slow_ok, fast_ok, mean_q, budget);
  }
  return {pass, out.str()};
}

// ------------------------------------------------------------------ 6

Outcome fill_degree_estimation() {
  const double eps = 0.25;
  Rng rng(derive_seed(6, "acceptance-fill"));
  int ok = 0;
  for (int t = 0; t < 1000; ++t) {
    std::size_t n = 2 + rng.uniform_index(49);
    StaticGraph g = gnp_graph(n, 0.05 + 0.35 * rng.uniform01(), rng);
    ComponentGraph cg(g);
    std::vector<char> elim(n, 0);
    std::vector<Vertex> perm = random_permutation(n, rng);
    std::size_t steps = rng.uniform_index(n);
    for (std::size_t i = 0; i < steps; ++i) {
      cg.pivot(perm[i]);
      elim[perm[i]] = 1;
    }
    Vertex u = perm[steps + rng.uniform_index(n - steps)];
    double truth = static_cast<double>(fill_degree_bruteforce(g, elim, u) + 1);
    double est = estimate_fill_1degree(cg, u, eps, rng);
    ok += std::abs(est - truth) <= eps * truth;
  }
  return {ok >= 990, fmt("%d/1000 estimates within (1 +- %.2f)(deg+1)", ok, eps)};
}

// ------------------------------------------------------------------ 7

bool within_factor(const StaticGraph& g, const std::vector<Vertex>& order, double factor) {
  EliminationReplay rep(g);
  for (Vertex v : order) {
    if (static_cast<double>(rep.degree(v)) > factor * static_cast<double>(rep.min_degree())) return false;
    rep.pivot(v);
  }
  return true;
}

Outcome approximation_quality() {
  Clock clock;
  ApproxOrderingOptions o;
  o.epsilon = 0.5;
  o.sketch_count = 1200;
  o.estimator_epsilon = 0.25;
  int ok = 0;
  for (std::uint64_t s = 0; s < 100; ++s) {
    Rng rng(derive_seed(s, "acceptance-approx-graph"));
    StaticGraph g = gnp_graph(60, 0.15, rng);
    OrderingResult r = approx_min_degree_sequence(g, s, o);
    ok += within_factor(g, r.order, 1.5);
  }
  double secs = clock.seconds();
  return {ok >= 95 && secs < 600,
          fmt("%d/100 runs within 1.5x of the step minimum at every step (sketch_count %zu, estimator eps %.2f), "
              "%.1f s (limit 600 s)",
              ok, o.sketch_count, o.estimator_epsilon, secs)};
}

// ------------------------------------------------------------------ 8

struct Indexed {
  std::vector<Vertex> ids;
  std::size_t size() const { return ids.size(); }
  Vertex operator[](std::size_t i) const { return ids[i]; }
};

Outcome candidate_machinery() {
  bool pass = true;
  std::ostringstream out;
  for (std::size_t k : {10u, 1000u}) {
    Rng rng(derive_seed(8, "acceptance-ks", k));
    std::vector<double> xs;
    for (int t = 0; t < 10000; ++t) xs.push_back(sample_decreasing_exponentials(k, 8, rng).front());
    double p = ks_pvalue(xs, [k](double x) { return std::pow(-std::expm1(-x), static_cast<double>(k)); });
    pass = pass && p > 0.01;
    out << fmt("KS k=%zu p=%.3f; ", k, p);
  }

  const double eps_hat = 1.0 / 64, c2 = 8;
  Rng setup(derive_seed(8, "acceptance-couple"));
  double total = 0, total_sq = 0;
  int contained = 0;
  const int trials = 10000;
  for (int t = 0; t < trials; ++t) {
    std::size_t k = 1 + setup.uniform_index(20000);
    Indexed s;
    std::vector<double> ref(k);
    for (std::size_t i = 0; i < k; ++i) {
      s.ids.push_back(static_cast<Vertex>(i));
      ref[i] = 1 + c2 * eps_hat * setup.uniform01();
    }
    const std::uint64_t seed = derive_seed(8, "couple", t);
    Rng r1(seed), r2(seed);
    auto cand = exp_decayed_candidates(s, eps_hat, 0, r1, c2);
    auto full = exp_decayed_candidates(s, eps_hat, 0, r2, std::numeric_limits<double>::infinity());
    auto decayed = [&](const Candidate& c) { return (1 - c.delta) * ref[c.vertex]; };
    const Candidate& best = *std::min_element(
        full.begin(), full.end(), [&](const Candidate& a, const Candidate& b) { return decayed(a) < decayed(b); });
    bool prefix = cand.size() <= full.size();
    for (std::size_t i = 0; prefix && i < cand.size(); ++i)
      prefix = cand[i].vertex == full[i].vertex && cand[i].delta == full[i].delta;
    contained += prefix && std::any_of(cand.begin(), cand.end(), [&](const Candidate& c) { return c.vertex == best.vertex; });
    total += static_cast<double>(cand.size());
    total_sq += static_cast<double>(cand.size()) * static_cast<double>(cand.size());
  }
  double mean = total / trials;
  double se = std::sqrt((total_sq / trials - mean * mean) / trials);
  pass = pass && contained == trials && mean <= std::exp(c2) + 3 * se;
  out << fmt("decayed minimum among candidates in %d/%d trials; mean candidates %.1f (limit %.1f)", contained, trials,
             mean, std::exp(c2) + 3 * se);
  return {pass, out.str()};
}

// ------------------------------------------------------------------ 9

Outcome decay_distortion() {
  const std::size_t n = 1024;
  const double eps = 0.25, eps_hat = make_decay_parameters(n, eps).eps_hat;
  Rng rng(derive_seed(9, "acceptance-decay"));
  int ok = 0;
  const int trials = 10000;
  for (int t = 0; t < trials; ++t) {
    double true_min = std::numeric_limits<double>::infinity(), decayed = true_min;
    for (std::size_t i = 0; i < n; ++i) {
      double x = static_cast<double>(1 + rng.uniform_index(n));
      true_min = std::min(true_min, x);
      decayed = std::min(decayed, (1 - eps_hat * rng.exponential()) * x);
    }
    ok += decayed >= (1 - eps) * true_min;
  }
  return {ok >= 9980, fmt("eps_hat=%.5f: %d/%d trials with decayed minimum >= (1 - eps) min", eps_hat, ok, trials)};
}

// ------------------------------------------------------------------ 10

Outcome covering_system() {
  bool pass = true;
  std::ostringstream out;
  for (std::size_t n : {1u, 4u, 10u, 100u, 1000u}) {
    CoveringSetSystem cs = covering_set_system(n);
    std::vector<char> hit(n * n, 0);
    std::size_t largest = 0;
    bool in_range = true;
    for (const auto& s : cs.subsets) {
      largest = std::max(largest, s.size());
      in_range = in_range && !s.empty() && s.front() >= 1 && s.back() <= n;
      if (!in_range) break;
      for (std::uint32_t a : s)
        for (std::uint32_t b : s) hit[(a - 1) * n + (b - 1)] = 1;
    }
    bool covered = in_range && std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
    double count_limit = 17.0 * n + 4 * std::sqrt(double(n)), size_limit = 10 * std::sqrt(double(n));
    bool ok = covered && cs.subsets.size() <= count_limit && largest <= size_limit;
    pass = pass && ok;
    out << fmt("n=%zu: %zu subsets (limit %.0f), largest %zu (limit %.1f), pairs %s; ", n, cs.subsets.size(),
               count_limit, largest, size_limit, covered ? "covered" : "MISSING");
  }
  return {pass, out.str()};
}

// ------------------------------------------------------------------ 11

Outcome ov_gadget() {
  Rng rng(derive_seed(11, "acceptance-ov"));
  int instances = 0, ok = 0;
  for (std::size_t n = 1; n <= 8; ++n)
    for (std::size_t d = 1; d <= 4; ++d)
      for (int rep = 0; rep < 3; ++rep) {
        std::vector<std::vector<std::uint8_t>> vecs(n, std::vector<std::uint8_t>(d));
        for (auto& v : vecs)
          for (auto& b : v) b = rng.bernoulli(0.5);
        OVGraph ov = ov_hard_graph(vecs);
        OrderingResult r = exact_mindeg_bruteforce(ov.graph);
        bool first = true;
        for (std::size_t i = 0; i < ov.num_dimension; ++i) first = first && ov.role[r.order[i]] == OVRole::Dimension;
        ok += first;
        ++instances;
      }
  return {ok == instances, fmt("%d/%d instances (up to 8 vectors, d up to 4) eliminate every dimension vertex first",
                               ok, instances)};
}

// ------------------------------------------------------------------ 12

Outcome adversary() {
  const std::size_t n = 4096;
  const double eps = 0.5;
  const std::size_t floor_size = n - 10 * static_cast<std::size_t>(std::ceil(log2d(double(n)) / (eps * eps)));
  int fixed_ok = 0, fresh_ok = 0;
  std::size_t fresh_min = n;
  for (std::uint64_t s = 0; s < 100; ++s) {
    Rng a(derive_seed(s, "acceptance-adversary-fixed"));
    fixed_ok += adversary_demo(n, eps, AdversaryMode::FixedSketch, a).equals_secret;
    Rng b(derive_seed(s, "acceptance-adversary-fresh"));
    AdversaryReport r = adversary_demo(n, eps, AdversaryMode::FreshSketch, b);
    fresh_ok += r.final_size >= floor_size;
    fresh_min = std::min(fresh_min, r.final_size);
  }
  return {fixed_ok == 100 && fresh_ok >= 95,
          fmt("fixed sketch: S = T on %d/100 seeds; fresh sketch: |S| >= %zu on %d/100 seeds (smallest %zu)", fixed_ok,
              floor_size, fresh_ok, fresh_min)};
}

// ------------------------------------------------------------------ 13

Outcome amortized_cost() {
  Rng rng(derive_seed(13, "acceptance-cost"));
  bool pass = true;
  double worst_changed = 0, worst_updates = 0;
  int graphs = 0;
  for (std::size_t n : {100u, 500u, 1000u, 2000u})
    for (double avg_deg : {3.0, 10.0, 30.0}) {
      StaticGraph g = gnp_graph(n, avg_deg / double(n - 1), rng);
      DynamicSketch ds(g, rng.next_u64());
      for (Vertex v : random_permutation(n, rng)) ds.pivot_vertex(v);
      const SketchCounters& c = ds.sketch().counters();
      const double m = static_cast<double>(std::max<std::size_t>(g.m(), 1)), l = log2d(double(n));
      double rc = c.changed / (m * l), ru = c.structure_updates() / (m * l * l);
      worst_changed = std::max(worst_changed, rc);
      worst_updates = std::max(worst_updates, ru);
      pass = pass && rc <= 50 && ru <= 50;
      ++graphs;
    }
  return {pass, fmt("%d graphs up to n=2000; worst changed/(m log n) = %.3f, worst updates/(m log^2 n) = %.3f "
                    "(limit 50 each)",
                    graphs, worst_changed, worst_updates)};
}

// ------------------------------------------------------------------ 14

Outcome scaling() {
  ApproxOrderingOptions o;
  o.epsilon = 0.5;
  o.sketch_count = 32;
  o.estimator_epsilon = 2;
  o.trim_exponent = 1;
  std::vector<double> secs;
  std::vector<std::size_t> edges;
  for (std::size_t n : {20000u, 40000u}) {
    Rng rng(derive_seed(14, "acceptance-scaling", n));
    StaticGraph g = gnp_graph(n, 10.0 / double(n), rng);
    Clock clock;
    OrderingResult r = approx_min_degree_sequence(g, 14, o);
    secs.push_back(clock.seconds());
    edges.push_back(g.m());
    if (!is_permutation_of_n(r.order, n)) return {false, "ordering is not a permutation"};
  }
  double ratio = secs[1] / secs[0];
  return {ratio <= 3 && secs[0] < 300 && secs[1] < 300,
          fmt("m=%zu: %.1f s, m=%zu: %.1f s, ratio %.2f (limit 3; each under 300 s); sketch_count %zu, "
              "estimator eps %.1f, trim exponent %d",
              edges[0], secs[0], edges[1], secs[1], ratio, o.sketch_count, o.estimator_epsilon, o.trim_exponent)};
}

struct Criterion {
  int id;
  const char* name;
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> all = {
      {1, "sketch exactness", sketch_exactness},
      {2, "exact ordering equivalence", exact_ordering_equivalence},
      {3, "quantile accuracy", quantile_accuracy},
      {4, "mean estimator", mean_estimator},
      {5, "nonzero-column estimators", nonzero_column_estimators},
      {6, "fill 1-degree estimation", fill_degree_estimation},
      {7, "approximation quality", approximation_quality},
      {8, "candidate machinery", candidate_machinery},
      {9, "decay distortion", decay_distortion},
      {10, "covering set system", covering_system},
      {11, "OV gadget", ov_gadget},
      {12, "adversary demo", adversary},
      {13, "amortized cost", amortized_cost},
      {14, "scaling", scaling},
  };
  std::vector<int> wanted;
  for (int i = 1; i < argc; ++i) {
    char* end = nullptr;
    long id = std::strtol(argv[i], &end, 10);
    if (*end || id < 1 || id > static_cast<long>(all.size())) {
      std::fprintf(stderr, "usage: %s [criterion 1-%zu ...]\n", argv[0], all.size());
      return 2;
    }
    wanted.push_back(static_cast<int>(id));
  }
  int failed = 0;
  for (const Criterion& c : all) {
    if (!wanted.empty() && std::find(wanted.begin(), wanted.end(), c.id) == wanted.end()) continue;
    Outcome r;
    try {
      r = c.run();
    } catch (const std::exception& e) {
      r = {false, std::string("exception: ") + e.what()};
    }
    failed += !r.pass;
    while (!r.detail.empty() && (r.detail.back() == ' ' || r.detail.back() == ';')) r.detail.pop_back();
    std::printf("%s %d: %s: %s\n", r.pass ? "PASS" : "FAIL", c.id, c.name, r.detail.c_str());
    std::fflush(stdout);
  }
  return failed ? 1 : 0;
}
