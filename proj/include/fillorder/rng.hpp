#pragma once

#include <cmath>
#include <cstdint>
#include <string_view>

namespace fillorder {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t label_hash(std::string_view label) {
  std::uint64_t h = 0xcbf29ce484222325ULL;  // FNV-1a
  for (unsigned char c : label) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

// Seed of the stream `label`[index] under `seed`. Streams with different
// labels or indices are independent for all practical purposes.
inline std::uint64_t derive_seed(std::uint64_t seed, std::string_view label, std::uint64_t index = 0) {
  return splitmix64(splitmix64(seed ^ label_hash(label)) + splitmix64(index + 0x632be59bd9b4e019ULL));
}

// Counter-mode generator: output i is splitmix64(seed + i * golden). Cheap to
// create, which matters because every sketch copy, bucket and estimator call
// gets its own stream. Conversions to reals and bounded integers are done
// here rather than through <random> distributions so that output is
// identical across standard libraries.
class Rng {
 public:
  using result_type = std::uint64_t;
  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return ~result_type{0}; }

  explicit Rng(std::uint64_t seed = 0) : state_(seed), seed_(seed) {}
  result_type operator()() { return next_u64(); }

  std::uint64_t seed() const { return seed_; }
  Rng derive(std::string_view label, std::uint64_t index = 0) const {
    return Rng(derive_seed(seed_, label, index));
  }

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // [0, 1)
  double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }
  // (0, 1)
  double uniform_open01() { return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53; }

  // Uniform in [0, n). n must be positive. Multiply-shift with rejection of
  // the biased low products.
  std::uint64_t uniform_index(std::uint64_t n) {
    unsigned __int128 m = static_cast<unsigned __int128>(next_u64()) * n;
    std::uint64_t low = static_cast<std::uint64_t>(m);
    if (low < n) {
      const std::uint64_t threshold = (0 - n) % n;
      while (low < threshold) {
        m = static_cast<unsigned __int128>(next_u64()) * n;
        low = static_cast<std::uint64_t>(m);
      }
    }
    return static_cast<std::uint64_t>(m >> 64);
  }

  bool bernoulli(double p) { return uniform01() < p; }

  double exponential(double rate = 1.0) { return -std::log(uniform_open01()) / rate; }

 private:
  std::uint64_t state_;
  std::uint64_t seed_;
};

}  // namespace fillorder
