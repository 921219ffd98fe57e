#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fillorder/rng.hpp"
#include "fillorder/static_graph.hpp"

namespace fillorder {

// ---------------------------------------------------------------- random and structured graphs

// G(n, p) by geometric skipping over the n(n-1)/2 vertex pairs.
StaticGraph gnp_graph(std::size_t n, double p, Rng& rng);
// Uniform graph with exactly m edges.
StaticGraph gnm_graph(std::size_t n, std::size_t m, Rng& rng);
// side x side grid; n must be a perfect square.
StaticGraph grid2d_graph(std::size_t n);

// ---------------------------------------------------------------- covering set systems

// Subsets of {1..n} of size at most p (p the smallest prime >= ceil(sqrt n))
// such that every pair of elements lies in a common subset: the lines
// y = a x + b and the rows x = a of the p x p grid over Z_p, where element t
// sits at ((t-1) / p, (t-1) % p). Empty intersections with {1..n} are dropped.
struct CoveringSetSystem {
  std::size_t n = 0;
  std::size_t p = 0;
  std::vector<std::vector<std::uint32_t>> subsets;  // 1-based, sorted
};

std::uint64_t next_prime(std::uint64_t x);  // smallest prime >= x
CoveringSetSystem covering_set_system(std::size_t n);

// ---------------------------------------------------------------- orthogonal-vectors gadget

enum class OVRole : std::uint8_t { Vector, Dimension, Pad };

struct OVGraph {
  StaticGraph graph;
  std::vector<OVRole> role;
  std::size_t num_vectors = 0, num_dimension = 0, num_pad = 0;
};

// One vertex per vector; per dimension j, one vertex per covering subset,
// joined to every vector i with a_i(j) = 1 that the subset contains; a clique
// of 20 ceil(sqrt n) pad vertices joined to every vector vertex.
OVGraph ov_hard_graph(const std::vector<std::vector<std::uint8_t>>& vectors);

// ---------------------------------------------------------------- adaptive adversary

enum class AdversaryMode { FixedSketch, FreshSketch };

struct AdversaryReport {
  AdversaryMode mode = AdversaryMode::FixedSketch;
  std::size_t n = 0;
  double epsilon = 0;
  std::size_t secret_size = 0;
  std::size_t final_size = 0;       // |S|
  std::size_t deletions = 0;        // n - |S|
  double recovered_fraction = 0;    // |S and T| / |T| for the first secret T
  bool equals_secret = false;       // S == T
  std::uint64_t queries = 0;
};

// Toy cardinality estimator n |S and T| / |T| with a secret T of size
// ceil(log2(n) / eps^2), attacked by deleting every i in turn and
// re-inserting it whenever the reported estimate moves. In fresh mode each
// query draws a new T and the attacker compares against the last estimate it
// saw for the current S.
AdversaryReport adversary_demo(std::size_t n, double epsilon, AdversaryMode mode, Rng& rng,
                               std::optional<std::size_t> secret_size = std::nullopt);

std::string to_string(AdversaryMode m);

}  // namespace fillorder
