#include "fillorder/generators.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace fillorder {

StaticGraph gnp_graph(std::size_t n, double p, Rng& rng) {
  if (!(p >= 0 && p <= 1)) throw InvalidArgument("gnp: p must lie in [0, 1]");
  std::vector<std::pair<Vertex, Vertex>> e;
  if (p > 0 && n > 1) {
    // Walk the pairs (v, w), w < v, skipping Geometric(p) many at a time.
    const double lq = std::log1p(-p);
    long long v = 1, w = -1;
    while (v < static_cast<long long>(n)) {
      double skip = p >= 1 ? 0.0 : std::floor(std::log(rng.uniform_open01()) / lq);
      w += 1 + static_cast<long long>(skip);
      while (w >= v && v < static_cast<long long>(n)) {
        w -= v;
        ++v;
      }
      if (v < static_cast<long long>(n)) e.emplace_back(static_cast<Vertex>(w), static_cast<Vertex>(v));
    }
  }
  return StaticGraph(n, e);
}

StaticGraph gnm_graph(std::size_t n, std::size_t m, Rng& rng) {
  const std::uint64_t pairs = n < 2 ? 0 : std::uint64_t(n) * (n - 1) / 2;
  if (m > pairs) throw InvalidArgument("gnm: too many edges");
  std::set<std::pair<Vertex, Vertex>> chosen;
  while (chosen.size() < m) {
    Vertex a = static_cast<Vertex>(rng.uniform_index(n)), b = static_cast<Vertex>(rng.uniform_index(n));
    if (a == b) continue;
    chosen.emplace(std::min(a, b), std::max(a, b));
  }
  return StaticGraph(n, std::vector<std::pair<Vertex, Vertex>>(chosen.begin(), chosen.end()));
}

StaticGraph grid2d_graph(std::size_t n) {
  std::size_t side = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(n))));
  if (side * side != n) throw InvalidArgument("grid2d: n must be a perfect square");
  std::vector<std::pair<Vertex, Vertex>> e;
  for (std::size_t r = 0; r < side; ++r)
    for (std::size_t c = 0; c < side; ++c) {
      Vertex v = static_cast<Vertex>(r * side + c);
      if (c + 1 < side) e.emplace_back(v, v + 1);
      if (r + 1 < side) e.emplace_back(v, static_cast<Vertex>(v + side));
    }
  return StaticGraph(n, e);
}

std::uint64_t next_prime(std::uint64_t x) {
  auto prime = [](std::uint64_t q) {
    if (q < 2) return false;
    for (std::uint64_t d = 2; d * d <= q; ++d)
      if (q % d == 0) return false;
    return true;
  };
  while (!prime(x)) ++x;
  return x;
}

CoveringSetSystem covering_set_system(std::size_t n) {
  if (n < 1) throw InvalidArgument("covering_set_system: n must be at least 1");
  CoveringSetSystem cs;
  cs.n = n;
  std::uint64_t root = static_cast<std::uint64_t>(std::ceil(std::sqrt(static_cast<double>(n))));
  while (root * root < n) ++root;
  while (root > 1 && (root - 1) * (root - 1) >= n) --root;
  const std::uint64_t p = next_prime(root);
  cs.p = p;
  auto keep = [&](std::vector<std::uint32_t> s) {
    s.erase(std::remove_if(s.begin(), s.end(), [&](std::uint32_t t) { return t > n; }), s.end());
    std::sort(s.begin(), s.end());
    if (!s.empty()) cs.subsets.push_back(std::move(s));
  };
  auto element = [&](std::uint64_t x, std::uint64_t y) { return static_cast<std::uint32_t>(x * p + y + 1); };
  for (std::uint64_t a = 0; a < p; ++a)
    for (std::uint64_t b = 0; b < p; ++b) {
      std::vector<std::uint32_t> s;
      for (std::uint64_t x = 0; x < p; ++x) s.push_back(element(x, (a * x + b) % p));
      keep(std::move(s));
    }
  for (std::uint64_t a = 0; a < p; ++a) {
    std::vector<std::uint32_t> s;
    for (std::uint64_t y = 0; y < p; ++y) s.push_back(element(a, y));
    keep(std::move(s));
  }
  return cs;
}

OVGraph ov_hard_graph(const std::vector<std::vector<std::uint8_t>>& vectors) {
  const std::size_t n = vectors.size();
  if (n < 1) throw InvalidArgument("ov_hard_graph: need at least one vector");
  const std::size_t d = vectors[0].size();
  if (d < 1) throw InvalidArgument("ov_hard_graph: dimension must be at least 1");
  for (const auto& v : vectors)
    if (v.size() != d) throw InvalidArgument("ov_hard_graph: vectors differ in dimension");

  CoveringSetSystem cs = covering_set_system(n);
  OVGraph out;
  out.num_vectors = n;
  out.num_dimension = d * cs.subsets.size();
  out.num_pad = 20 * static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(n))));
  const std::size_t total = n + out.num_dimension + out.num_pad;
  out.role.assign(total, OVRole::Vector);
  std::vector<std::pair<Vertex, Vertex>> e;
  Vertex next = static_cast<Vertex>(n);
  for (std::size_t j = 0; j < d; ++j)
    for (const auto& s : cs.subsets) {
      out.role[next] = OVRole::Dimension;
      for (std::uint32_t t : s)
        if (vectors[t - 1][j]) e.emplace_back(static_cast<Vertex>(t - 1), next);
      ++next;
    }
  const Vertex pad0 = next;
  for (std::size_t i = 0; i < out.num_pad; ++i) {
    Vertex a = static_cast<Vertex>(pad0 + i);
    out.role[a] = OVRole::Pad;
    for (Vertex b = pad0; b < a; ++b) e.emplace_back(b, a);
    for (Vertex v = 0; v < n; ++v) e.emplace_back(v, a);
  }
  out.graph = StaticGraph(total, e);
  return out;
}

std::string to_string(AdversaryMode m) { return m == AdversaryMode::FixedSketch ? "fixed" : "fresh"; }

AdversaryReport adversary_demo(std::size_t n, double epsilon, AdversaryMode mode, Rng& rng,
                               std::optional<std::size_t> secret_size) {
  if (n < 16) throw InvalidArgument("adversary_demo: n must be at least 16");
  if (!(epsilon > 0)) throw InvalidArgument("adversary_demo: epsilon must be positive");
  AdversaryReport rep;
  rep.mode = mode;
  rep.n = n;
  rep.epsilon = epsilon;
  const std::size_t t = std::min<std::size_t>(
      n, secret_size ? *secret_size
                     : static_cast<std::size_t>(std::ceil(std::log2(static_cast<double>(n)) / (epsilon * epsilon))));
  rep.secret_size = t;

  auto draw_secret = [&]() {
    // Partial Fisher-Yates over 0..n-1.
    std::vector<std::uint32_t> pool(n);
    for (std::size_t i = 0; i < n; ++i) pool[i] = static_cast<std::uint32_t>(i);
    for (std::size_t i = 0; i < t; ++i) std::swap(pool[i], pool[i + rng.uniform_index(n - i)]);
    pool.resize(t);
    return pool;
  };
  std::vector<char> in_s(n, 1);
  // The estimate n |S and T| / |T| moves exactly when |S and T| does.
  auto hits = [&](const std::vector<std::uint32_t>& secret) {
    std::size_t c = 0;
    for (std::uint32_t x : secret) c += in_s[x];
    ++rep.queries;
    return c;
  };
  auto estimate = [&](const std::vector<std::uint32_t>& secret) {
    return secret.empty() ? 0.0 : static_cast<double>(n) * static_cast<double>(hits(secret)) / static_cast<double>(secret.size());
  };

  const std::vector<std::uint32_t> first = draw_secret();
  double last = estimate(first);
  for (std::size_t i = 0; i < n; ++i) {
    in_s[i] = 0;
    double now = mode == AdversaryMode::FixedSketch ? estimate(first) : estimate(draw_secret());
    if (now != last)
      in_s[i] = 1;
    else
      last = now;
  }

  std::vector<char> in_t(n, 0);
  for (std::uint32_t x : first) in_t[x] = 1;
  std::size_t both = 0;
  rep.equals_secret = true;
  for (std::size_t i = 0; i < n; ++i) {
    rep.final_size += in_s[i];
    both += in_s[i] && in_t[i];
    if (in_s[i] != in_t[i]) rep.equals_secret = false;
  }
  rep.deletions = n - rep.final_size;
  rep.recovered_fraction = t == 0 ? 0.0 : static_cast<double>(both) / static_cast<double>(t);
  return rep;
}

}  // namespace fillorder
