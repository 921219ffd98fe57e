#include "fillorder/dynamic_sketch.hpp"

#include <algorithm>
#include <cmath>

namespace fillorder {

SketchCounters& SketchCounters::operator+=(const SketchCounters& o) {
  pivots += o.pivots;
  changed += o.changed;
  fill_updates += o.fill_updates;
  heap_pushes += o.heap_pushes;
  melds += o.melds;
  informs += o.informs;
  relabels += o.relabels;
  rescans += o.rescans;
  return *this;
}

FillLayout::FillLayout(const StaticGraph& g) : offset(g.n() + 1, 0) {
  for (Vertex u = 0; u < g.n(); ++u) offset[u + 1] = offset[u] + g.degree(u) + 1;
}

namespace {

// Dispatches pivot hooks to a list of copies.
struct CopiesObserver {
  std::vector<SketchCopy>* copies;
  std::size_t first = 0;
  void before_detach(const ComponentGraph& g, Vertex v) {
    for (std::size_t i = first; i < copies->size(); ++i) (*copies)[i].before_detach(g, v);
  }
  void before_meld(const ComponentGraph& g, Vertex v, Vertex a, Vertex b, Vertex keep) {
    for (std::size_t i = first; i < copies->size(); ++i) (*copies)[i].before_meld(g, v, a, b, keep);
  }
  void after_pivot(const ComponentGraph& g, Vertex v, Vertex x) {
    for (std::size_t i = first; i < copies->size(); ++i) (*copies)[i].after_pivot(g, v, x);
  }
};

struct SingleObserver {
  SketchCopy* s;
  void before_detach(const ComponentGraph& g, Vertex v) { s->before_detach(g, v); }
  void before_meld(const ComponentGraph& g, Vertex v, Vertex a, Vertex b, Vertex keep) {
    s->before_meld(g, v, a, b, keep);
  }
  void after_pivot(const ComponentGraph& g, Vertex v, Vertex x) { s->after_pivot(g, v, x); }
};

}  // namespace

SketchCopy::SketchCopy(const ComponentGraph& g, std::shared_ptr<const FillLayout> layout,
                       std::uint64_t seed)
    : layout_(std::move(layout)) {
  Rng rng(seed);
  keys_.resize(g.n());
  for (auto& k : keys_) k = rng.next_u64();
  init(g);
}

SketchCopy::SketchCopy(const ComponentGraph& g, std::shared_ptr<const FillLayout> layout,
                       std::vector<std::uint64_t> keys)
    : layout_(std::move(layout)), keys_(std::move(keys)) {
  if (keys_.size() != g.n()) throw InvalidArgument("SketchCopy: need one key per vertex");
  init(g);
}

void SketchCopy::init(const ComponentGraph& g) {
  if (!g.history().empty()) throw InvalidArgument("SketchCopy: graph already pivoted");
  const StaticGraph& sg = g.origin();
  const std::size_t n = sg.n();
  contrib_.resize(layout_->offset[n]);
  value_.resize(layout_->offset[n]);
  size_.resize(n);
  min_.resize(n);
  heap_.resize(n);
  stamp_.assign(n, 0);
  first_min_.assign(n, kNoVertex);
  for (Vertex u = 0; u < n; ++u) {
    Vertex* c = contrib(u);
    std::size_t s = 0;
    bool placed = false;
    Vertex best = u;
    for (Vertex y : sg.adj(u)) {
      if (!placed && u < y) {
        c[s++] = u;
        placed = true;
      }
      c[s++] = y;
      if (key_less(y, best)) best = y;
    }
    if (!placed) c[s++] = u;
    std::copy(c, c + s, value(u));
    size_[u] = static_cast<std::uint32_t>(s);
    min_[u] = best;
  }
}

double SketchCopy::key_real(Vertex v) const {
  return std::ldexp(static_cast<double>(keys_[v]) + 0.5, -64);
}

std::size_t SketchCopy::find(Vertex u, Vertex c) const {
  const Vertex* b = contrib(u);
  const Vertex* e = b + size_[u];
  const Vertex* it = std::lower_bound(b, e, c);
  return (it != e && *it == c) ? static_cast<std::size_t>(it - b) : static_cast<std::size_t>(-1);
}

void SketchCopy::erase_at(Vertex u, std::size_t i) {
  Vertex* c = contrib(u);
  Vertex* v = value(u);
  std::size_t s = size_[u];
  std::copy(c + i + 1, c + s, c + i);
  std::copy(v + i + 1, v + s, v + i);
  size_[u] = static_cast<std::uint32_t>(s - 1);
  ++counters_.fill_updates;
}

void SketchCopy::insert(Vertex u, Vertex cid, Vertex val) {
  Vertex* c = contrib(u);
  Vertex* v = value(u);
  std::size_t s = size_[u];
  std::size_t i = static_cast<std::size_t>(std::lower_bound(c, c + s, cid) - c);
  std::copy_backward(c + i, c + s, c + s + 1);
  std::copy_backward(v + i, v + s, v + s + 1);
  c[i] = cid;
  v[i] = val;
  size_[u] = static_cast<std::uint32_t>(s + 1);
  ++counters_.fill_updates;
}

void SketchCopy::recompute_min(Vertex u) {
  const Vertex* v = value(u);
  Vertex best = kNoVertex;
  for (std::size_t i = 0; i < size_[u]; ++i)
    if (best == kNoVertex || key_less(v[i], best)) best = v[i];
  min_[u] = best;
  ++counters_.rescans;
}

void SketchCopy::set_value(Vertex u, std::size_t i, Vertex val) {
  Vertex* v = value(u);
  Vertex old = v[i];
  v[i] = val;
  ++counters_.fill_updates;
  if (key_less(val, min_[u]))
    min_[u] = val;
  else if (old == min_[u] && val != old)
    recompute_min(u);
}

void SketchCopy::flag(Vertex u, Vertex old_min) {
  if (stamp_[u] == epoch_) return;
  stamp_[u] = epoch_;
  first_min_[u] = old_min;
  touched_.push_back(u);
}

Vertex SketchCopy::heap_min(const ComponentGraph& g, Vertex x, bool allow_pivot) {
  auto& h = heap_[x];
  auto greater = [this](Vertex a, Vertex b) { return key_less(b, a); };
  while (!h.empty()) {
    Vertex top = h.front();
    if (g.is_remaining(top) || (allow_pivot && top == pivot_)) return top;
    std::pop_heap(h.begin(), h.end(), greater);
    h.pop_back();
  }
  return kNoVertex;
}

void SketchCopy::heap_push(Vertex x, Vertex y) {
  auto& h = heap_[x];
  h.push_back(y);
  std::push_heap(h.begin(), h.end(), [this](Vertex a, Vertex b) { return key_less(b, a); });
  ++counters_.heap_pushes;
}

void SketchCopy::inform_remaining(const ComponentGraph& g, Vertex w, Vertex old_val, Vertex new_val) {
  if (old_val == new_val) return;
  for (Vertex y : g.remaining_neighbors(w)) {
    std::size_t i = find(y, w);
    Vertex before = min_[y];
    set_value(y, i, new_val);
    ++counters_.informs;
    if (min_[y] != before) flag(y, before);
  }
}

void SketchCopy::before_detach(const ComponentGraph& g, Vertex v) {
  pivot_ = v;
  ++epoch_;
  touched_.clear();
  ++counters_.pivots;
  const VertexSet& nb = g.remaining_neighbors(v);
  // R(v) leaves the fill maps of v's remaining neighbors.
  for (Vertex y : nb) {
    Vertex before = min_[y];
    erase_at(y, find(y, v));
    if (before == v) {
      recompute_min(y);
      flag(y, before);
    }
  }
  // remaining[v] is built from the remaining neighbors.
  auto& h = heap_[v];
  h.clear();
  for (Vertex y : nb) heap_push(v, y);
  if (nb.empty()) return;
  Vertex m = h.front();
  // The new component v contributes its minimum to each of them.
  for (Vertex y : nb) {
    Vertex before = min_[y];
    insert(y, v, m);
    if (key_less(m, before)) {
      min_[y] = m;
      flag(y, before);
    }
  }
}

void SketchCopy::before_meld(const ComponentGraph& g, Vertex /*v*/, Vertex a, Vertex b, Vertex keep) {
  ++counters_.melds;
  // Delete R(v) from remaining[b]; its neighbors learn if the minimum moved.
  Vertex old_b = heap_min(g, b, true);
  Vertex new_b = heap_min(g, b, false);
  if (old_b != new_b && new_b != kNoVertex) inform_remaining(g, b, old_b, new_b);

  Vertex ma = heap_min(g, a, false);
  if (ma != kNoVertex && new_b != kNoVertex) {
    if (key_less(ma, new_b))
      inform_remaining(g, b, new_b, ma);
    else
      inform_remaining(g, a, ma, new_b);
  }

  Vertex other = keep == a ? b : a;
  for (Vertex y : g.remaining_neighbors(other)) {
    std::size_t i = find(y, other);
    Vertex val = value(y)[i];
    erase_at(y, i);
    if (find(y, keep) == static_cast<std::size_t>(-1)) insert(y, keep, val);
    ++counters_.relabels;
  }

  auto& hk = heap_[keep];
  auto& ho = heap_[other];
  if (ho.size() > hk.size()) hk.swap(ho);
  for (Vertex y : ho)
    if (g.is_remaining(y)) heap_push(keep, y);
  std::vector<Vertex>().swap(ho);
}

void SketchCopy::after_pivot(const ComponentGraph& g, Vertex v, Vertex /*x*/) {
  size_[v] = 0;
  min_[v] = kNoVertex;
  changed_.clear();
  for (Vertex y : touched_)
    if (g.is_remaining(y) && min_[y] != first_min_[y]) changed_.push_back(y);
  counters_.changed += changed_.size();
  pivot_ = kNoVertex;
}

std::vector<std::pair<Vertex, Vertex>> SketchCopy::fill_entries(Vertex u) const {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (std::size_t i = 0; i < size_[u]; ++i) out.emplace_back(contrib(u)[i], value(u)[i]);
  return out;
}

std::vector<Vertex> SketchCopy::remaining_content(const ComponentGraph& g, Vertex x) const {
  std::vector<Vertex> out;
  for (Vertex y : heap_[x])
    if (g.is_remaining(y)) out.push_back(y);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

DynamicSketch::DynamicSketch(const StaticGraph& g, std::uint64_t seed)
    : graph_(g), sketch_(graph_, std::make_shared<FillLayout>(g), seed) {}

DynamicSketch::DynamicSketch(const StaticGraph& g, std::vector<std::uint64_t> keys)
    : graph_(g), sketch_(graph_, std::make_shared<FillLayout>(g), std::move(keys)) {}

Vertex DynamicSketch::query_min(Vertex u) const {
  if (u >= graph_.n() || !graph_.is_remaining(u)) throw InvalidArgument("query_min: vertex is not remaining");
  return sketch_.query_min(u);
}

const std::vector<Vertex>& DynamicSketch::pivot_vertex(Vertex v) {
  SingleObserver obs{&sketch_};
  graph_.pivot(v, obs);
  return sketch_.changed();
}

SketchBank::SketchBank(const StaticGraph& g, std::uint64_t seed, std::size_t k, std::string label)
    : g_(&g), seed_(seed), label_(std::move(label)), layout_(std::make_shared<FillLayout>(g)), graph_(g) {
  copies_.reserve(k);
  for (std::size_t i = 0; i < k; ++i) copies_.emplace_back(graph_, layout_, derive_seed(seed_, label_, i));
}

void SketchBank::pivot(Vertex v) {
  CopiesObserver obs{&copies_, 0};
  graph_.pivot(v, obs);
}

std::size_t SketchBank::add_copies(std::size_t count) {
  const std::size_t first = copies_.size();
  ComponentGraph replay(*g_);
  copies_.reserve(first + count);
  for (std::size_t i = 0; i < count; ++i)
    copies_.emplace_back(replay, layout_, derive_seed(seed_, label_, first + i));
  CopiesObserver obs{&copies_, first};
  for (Vertex v : graph_.history()) replay.pivot(v, obs);
  return first;
}

SketchCounters SketchBank::total_counters() const {
  SketchCounters c;
  for (const auto& s : copies_) c += s.counters();
  return c;
}

}  // namespace fillorder
