#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <unordered_map>
#include <vector>

#include "fillorder/approx_degree_ds.hpp"
#include "fillorder/rng.hpp"

namespace fillorder {

struct DecayParameters {
  double epsilon = 0.5;
  double eps_hat = 0.0;  // min(epsilon / (c1 ceil(log2 n)), 1/64)
  double c1 = 2.0;
  double c2 = 8.0;
  int c3 = 7;
};

// c3 = 0 and c2 = 0 keep the defaults 7 and 8.
DecayParameters make_decay_parameters(std::size_t n, double epsilon, int c3 = 0, double c2 = 0);

// Largest of k i.i.d. Exp(1) variables, by inverting (1 - e^-x)^k.
double sample_max_exponential(std::size_t k, Rng& rng);

// Lazily yields X_(k) > X_(k-1) > ... for k i.i.d. Exp(1) variables: the
// maximum first, then gaps Exp(1), Exp(2), ... . Stops after k values or at
// the first value below X_(k) - c2, which is not returned.
class DecreasingExponentials {
 public:
  DecreasingExponentials(std::size_t k, double c2, Rng& rng);
  bool next(double& x);
  std::size_t produced() const { return produced_; }

 private:
  std::size_t k_;
  double c2_, top_ = 0, cur_ = 0;
  std::size_t produced_ = 0;
  bool done_ = false;
  Rng* rng_;
};

std::vector<double> sample_decreasing_exponentials(std::size_t k, double c2, Rng& rng);

// Uniform sampling without replacement from {0, ..., size - 1}; O(1) memory
// per draw (sparse Fisher-Yates).
class SparseShuffle {
 public:
  explicit SparseShuffle(std::size_t size) : size_(size) {}
  std::size_t next(Rng& rng);
  std::size_t drawn() const { return drawn_; }

 private:
  std::size_t at(std::size_t i) const {
    auto it = swapped_.find(i);
    return it == swapped_.end() ? i : it->second;
  }
  std::size_t size_, drawn_ = 0;
  std::unordered_map<std::size_t, std::size_t> swapped_;
};

struct Candidate {
  double delta = 0;
  Vertex vertex = kNoVertex;
  std::size_t label = 0;
};

// Candidates for the decayed minimum of a set S whose values lie within a
// factor (1 + c2 eps_hat) of one another: the i-th largest of |S| Exp(1)
// variables, scaled by eps_hat, goes to the i-th element of a random
// permutation of S, and only the window produced by DecreasingExponentials
// is materialized. `members` needs size() and operator[].
template <class Members>
std::vector<Candidate> exp_decayed_candidates(const Members& members, double eps_hat, std::size_t label,
                                              Rng& rng, double c2 = 8.0) {
  std::vector<Candidate> out;
  if (members.size() == 0) return out;
  DecreasingExponentials xs(members.size(), c2, rng);
  SparseShuffle pick(members.size());
  double x;
  while (xs.next(x)) out.push_back({eps_hat * x, members[pick.next(rng)], label});
  return out;
}

struct ScoredCandidate {
  Candidate c;
  double value = 0;  // (1 - delta) (1 + eps_hat)^bucket
};

struct StepCandidates {
  std::vector<ScoredCandidate> survivors;
  double threshold = 0;
  std::size_t buckets_scanned = 0;
  std::size_t bucket_zero = 0;
};

// Candidates of one ordering step. Bucket 0 members always enter with a fresh
// delta each. Every other nonempty bucket i draws its variates from its own
// stream derived from (step_seed, i): first the maximum, which fixes the
// bucket's smallest value, then a member for it, then the next variate and
// so on. Those maxima set the trim threshold (1 + eps_hat)^c3 times the
// smallest value seen, and a bucket is expanded only while its values stay
// under the threshold and within c2 of its maximum. With `exhaustive` every
// member of every bucket gets a delta from the same streams and nothing is
// trimmed, so the windowed run sees a prefix of each bucket's sequence.
StepCandidates step_candidates(const ApproxDegreeDS::Report& rep, const DecayParameters& p,
                               std::uint64_t step_seed, bool exhaustive = false);

struct ApproxOrderingOptions {
  double epsilon = 0.5;
  // 0 selects the defaults derived from eps_hat.
  std::size_t sketch_count = 0;
  double estimator_epsilon = 0;
  int trim_exponent = 0;   // c3
  double window = 0;       // c2
};

OrderingResult approx_min_degree_sequence(const StaticGraph& g, std::uint64_t seed,
                                          const ApproxOrderingOptions& opts);

inline OrderingResult approx_min_degree_sequence(const StaticGraph& g, double epsilon, std::uint64_t seed) {
  ApproxOrderingOptions o;
  o.epsilon = epsilon;
  return approx_min_degree_sequence(g, seed, o);
}

}  // namespace fillorder
