#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fillorder/dynamic_sketch.hpp"

namespace fillorder {

struct ApproxDegreeOptions {
  double epsilon = 0.1;        // bucket width; clamped to at most 1/2
  std::size_t sketch_count = 0;  // 0: 50 ceil(ceil(log2 n) / epsilon^2)
  std::string label = "approx-sketch";
};

std::size_t approx_sketch_count(std::size_t n, double epsilon);

// k sketch copies; each remaining vertex u keeps the multiset of the key
// values of its k minimizers and Q(u), the floor(k (1 - 1/e))-th smallest of
// them. 1 / Q(u) estimates deg(u) + 1. Vertices are grouped into buckets of
// geometrically growing 1 / Q.
class ApproxDegreeDS {
  struct ByQDesc {
    bool operator()(const std::pair<std::uint64_t, Vertex>& a, const std::pair<std::uint64_t, Vertex>& b) const {
      return a.first > b.first || (a.first == b.first && a.second < b.second);
    }
  };
  using GlobalIndex = OrderedSet<std::pair<std::uint64_t, Vertex>, ByQDesc>;

 public:
  // Vertices of one bucket, ordered by decreasing Q then id. A view into the
  // global index; valid until the next pivot.
  class Bucket {
   public:
    Bucket() = default;
    Bucket(const GlobalIndex* idx, std::size_t begin, std::size_t end) : idx_(idx), begin_(begin), end_(end) {}
    std::size_t size() const { return end_ - begin_; }
    bool empty() const { return end_ == begin_; }
    Vertex operator[](std::size_t i) const { return idx_->select(begin_ + i).second; }

   private:
    const GlobalIndex* idx_ = nullptr;
    std::size_t begin_ = 0, end_ = 0;
  };

  struct Report {
    std::vector<Bucket> buckets;  // index i holds Q in ((1+eps)^-(i+1), (1+eps)^-i]
    std::size_t first_nonempty = 0;
  };

  ApproxDegreeDS(const StaticGraph& g, std::uint64_t seed, ApproxDegreeOptions opts = {});

  const ComponentGraph& graph() const { return bank_.graph(); }
  double epsilon() const { return eps_; }
  std::size_t sketch_count() const { return bank_.size(); }
  std::size_t rank() const { return rank_; }
  std::size_t num_buckets() const { return counts_.size(); }

  void pivot(Vertex u);
  Report report() const;

  double quantile(Vertex u) const;  // Q(u)
  double quantile_degree_estimate(Vertex u) const { return 1.0 / quantile(u); }
  std::size_t bucket_of(Vertex u) const { return bucket_index(q_[u]); }
  // Bucket index a given Q value would fall into.
  std::size_t bucket_index(std::uint64_t q) const;
  // Closed range [(1+eps)^i, (1+eps)^(i+1)] of 1-degrees bucket i stands for.
  std::pair<double, double> bucket_range(std::size_t i) const;

  std::uint64_t multiset_updates() const { return multiset_updates_; }
  SketchCounters sketch_counters() const { return bank_.total_counters(); }

 private:
  void refresh(Vertex u);

  double eps_;
  SketchBank bank_;
  std::size_t rank_;
  std::vector<OrderedSet<std::pair<std::uint64_t, std::uint32_t>>> values_;  // (key value, copy)
  std::vector<std::vector<Vertex>> minimizer_;                                // [copy][vertex]
  std::vector<std::uint64_t> q_;
  GlobalIndex index_;
  std::vector<std::size_t> counts_;
  std::vector<std::uint32_t> dirty_stamp_;
  std::uint32_t epoch_ = 0;
  std::uint64_t multiset_updates_ = 0;
};

double key_to_real(std::uint64_t k);

}  // namespace fillorder
