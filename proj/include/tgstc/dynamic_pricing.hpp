#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <ranges>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "tgstc/types.hpp"

namespace tgstc {

/// One request of an update sequence for the dynamic vertex cover.
/// add_vertex/remove_vertex carry the implicit vertex bookkeeping: a vertex
/// must exist before an incident edge is inserted and must be isolated when
/// removed.
template <class V, class W>
struct UpdateRequest {
  enum class Kind { add_vertex, remove_vertex, ins_edge, del_edge, inc_weight, dec_weight };

  Kind kind;
  V a{};
  V b{};
  W weight{};

  static UpdateRequest add_vertex(V v, W w) { return {Kind::add_vertex, std::move(v), V{}, w}; }
  static UpdateRequest remove_vertex(V v) { return {Kind::remove_vertex, std::move(v), V{}, W{}}; }
  static UpdateRequest ins_edge(V x, V y) { return {Kind::ins_edge, std::move(x), std::move(y), W{}}; }
  static UpdateRequest del_edge(V x, V y) { return {Kind::del_edge, std::move(x), std::move(y), W{}}; }
  static UpdateRequest inc_weight(V v, W w) { return {Kind::inc_weight, std::move(v), V{}, w}; }
  static UpdateRequest dec_weight(V v, W w) { return {Kind::dec_weight, std::move(v), V{}, w}; }

  friend bool operator==(const UpdateRequest&, const UpdateRequest&) = default;
};

template <class V, class W>
using UpdateSequence = std::vector<UpdateRequest<V, W>>;

template <class V, class W>
struct CoverSnapshot {
  std::vector<V> cover;  // ascending
  W weight{};
};

/// Work counters. `examined` counts incidences inspected while collecting
/// the set of uncovered edges handed to the price-raising pass.
struct PricingCounters {
  std::uint64_t ins_edge = 0;
  std::uint64_t del_edge = 0;
  std::uint64_t inc_weight = 0;
  std::uint64_t dec_weight = 0;
  std::uint64_t examined = 0;
};

/// Fully dynamic 2-approximate minimum weight vertex cover by the pricing
/// method.
///
/// Every edge carries a price, every vertex the sum s(v) of its incident
/// prices. Prices stay fair (s(v) <= w(v)) and the cover is exactly the set of
/// tight vertices (s(v) == w(v)). After each operation every edge has a tight
/// endpoint, so w(C) <= 2 * sum(prices) <= 2 * w(OPT).
template <class V, class W, class Hash = std::hash<V>>
class DynamicPricingCover {
 public:
  using vertex_type = V;
  using weight_type = W;
  using Request = UpdateRequest<V, W>;
  using Traits = WeightTraits<W>;

  // --- vertex bookkeeping -------------------------------------------------

  void add_vertex(const V& v, W w) {
    if (w < W{}) throw ContractError("negative vertex weight");
    if (index_.contains(v)) throw ContractError("vertex already present");
    std::uint32_t id;
    if (!free_vertices_.empty()) {
      id = free_vertices_.back();
      free_vertices_.pop_back();
    } else {
      id = static_cast<std::uint32_t>(vertices_.size());
      vertices_.emplace_back();
    }
    VertexSlot& s = vertices_[id];
    s.key = v;
    s.weight = w;
    s.sum = W{};
    s.incident.clear();
    s.tight = false;
    s.alive = true;
    index_.emplace(v, id);
    ++vertex_count_;
    refresh(id);
  }

  void remove_vertex(const V& v) {
    std::uint32_t id = id_of(v);
    VertexSlot& s = vertices_[id];
    if (!s.incident.empty()) throw ContractError("removing a vertex that still has edges");
    set_tight(id, false);
    s.alive = false;
    index_.erase(v);
    free_vertices_.push_back(id);
    --vertex_count_;
  }

  // --- the four dynamic operations ----------------------------------------

  void ins_edge(const V& x, const V& y) {
    std::uint32_t a = id_of(x), b = id_of(y);
    if (a == b) throw ContractError("self-loop in cover graph");
    if (edge_index_.contains(pair_key(a, b))) throw ContractError("duplicate edge");
    ++counters_.ins_edge;
    std::uint32_t e = new_edge(a, b);
    touch_degree(a);
    touch_degree(b);
    last_examined_ = 1;
    raise_prices(std::span<const std::uint32_t>(&e, 1));
    counters_.examined += last_examined_;
  }

  void del_edge(const V& x, const V& y) {
    std::uint32_t a = id_of(x), b = id_of(y);
    auto it = edge_index_.find(pair_key(a, b));
    if (it == edge_index_.end()) throw ContractError("deleting an unknown edge");
    ++counters_.del_edge;
    touch_degree(a);
    touch_degree(b);
    const std::uint32_t e = it->second;
    const W p = edges_[e].price;
    const bool a_was = vertices_[a].tight, b_was = vertices_[b].tight;
    drop_edge(e);
    vertices_[a].sum -= p;
    vertices_[b].sum -= p;
    refresh(a);
    refresh(b);

    last_examined_ = 0;
    scratch_.clear();
    if (a_was && !vertices_[a].tight) collect_uncovered(a, scratch_);
    if (b_was && !vertices_[b].tight) collect_uncovered(b, scratch_);
    raise_prices(scratch_);
    counters_.examined += last_examined_;
  }

  void inc_weight(const V& v, W w_new) {
    std::uint32_t id = id_of(v);
    VertexSlot& s = vertices_[id];
    if (!(w_new > s.weight)) throw ContractError("inc_weight requires a larger weight");
    ++counters_.inc_weight;
    touch_degree(id);
    const bool was = s.tight;
    set_weight(id, w_new);

    last_examined_ = 0;
    scratch_.clear();
    if (was && !vertices_[id].tight) collect_uncovered(id, scratch_);
    raise_prices(scratch_);
    counters_.examined += last_examined_;
  }

  void dec_weight(const V& v, W w_new) {
    std::uint32_t id = id_of(v);
    if (w_new < W{}) throw ContractError("negative vertex weight");
    if (!(w_new < vertices_[id].weight)) throw ContractError("dec_weight requires a smaller weight");
    ++counters_.dec_weight;
    touch_degree(id);
    last_examined_ = 0;

    // zero every incident price; neighbours may lose tightness
    lost_.clear();
    for (std::uint32_t e : vertices_[id].incident) {
      ++last_examined_;
      EdgeSlot& es = edges_[e];
      const std::uint32_t x = es.a == id ? es.b : es.a;
      if (es.price != W{}) {
        const bool x_was = vertices_[x].tight;
        vertices_[x].sum -= es.price;
        es.price = W{};
        refresh(x);
        if (x_was && !vertices_[x].tight) lost_.push_back(x);
      }
    }
    vertices_[id].sum = W{};
    set_weight(id, w_new);

    scratch_.clear();
    const bool v_tight = vertices_[id].tight;
    for (std::uint32_t e : vertices_[id].incident) {
      const EdgeSlot& es = edges_[e];
      const std::uint32_t x = es.a == id ? es.b : es.a;
      if (!v_tight && !vertices_[x].tight) scratch_.push_back(e);
    }
    for (std::uint32_t x : lost_) {
      touch_degree(x);
      for (std::uint32_t e : vertices_[x].incident) {
        const EdgeSlot& es = edges_[e];
        const std::uint32_t y = es.a == x ? es.b : es.a;
        if (y == id) continue;  // already inspected from v's side
        ++last_examined_;
        if (!vertices_[y].tight) scratch_.push_back(e);
      }
    }
    raise_prices(scratch_);
    counters_.examined += last_examined_;
  }

  /// Raises prices on the given edges in order until each has a tight
  /// endpoint. Requires every other edge to be covered already.
  void update(std::span<const std::pair<V, V>> edges) {
    std::vector<std::uint32_t> ids;
    ids.reserve(edges.size());
    for (const auto& [x, y] : edges) {
      auto it = edge_index_.find(pair_key(id_of(x), id_of(y)));
      if (it == edge_index_.end()) throw ContractError("update on an unknown edge");
      ids.push_back(it->second);
    }
    raise_prices(ids);
  }

  /// Dispatches one request. Weight changes to the current value are no-ops.
  void apply(const Request& r) {
    using K = typename Request::Kind;
    switch (r.kind) {
      case K::add_vertex: add_vertex(r.a, r.weight); break;
      case K::remove_vertex: remove_vertex(r.a); break;
      case K::ins_edge: ins_edge(r.a, r.b); break;
      case K::del_edge: del_edge(r.a, r.b); break;
      case K::inc_weight:
        if (r.weight != weight(r.a)) inc_weight(r.a, r.weight);
        break;
      case K::dec_weight:
        if (r.weight != weight(r.a)) dec_weight(r.a, r.weight);
        break;
    }
  }

  template <std::ranges::input_range R>
  CoverSnapshot<V, W> apply_sequence(const R& sequence) {
    for (const auto& r : sequence) apply(r);
    return snapshot();
  }

  // --- queries -------------------------------------------------------------

  bool contains(const V& v) const { return index_.contains(v); }
  bool has_edge(const V& x, const V& y) const {
    auto ix = index_.find(x), iy = index_.find(y);
    if (ix == index_.end() || iy == index_.end()) return false;
    return edge_index_.contains(pair_key(ix->second, iy->second));
  }
  W weight(const V& v) const { return vertices_[id_of(v)].weight; }
  W price_sum(const V& v) const { return vertices_[id_of(v)].sum; }
  bool in_cover(const V& v) const { return vertices_[id_of(v)].tight; }
  std::size_t degree(const V& v) const { return vertices_[id_of(v)].incident.size(); }

  W price(const V& x, const V& y) const {
    auto it = edge_index_.find(pair_key(id_of(x), id_of(y)));
    if (it == edge_index_.end()) throw ContractError("no such edge");
    return edges_[it->second].price;
  }

  std::vector<V> neighbors(const V& v) const {
    std::vector<V> out;
    const std::uint32_t id = id_of(v);
    for (std::uint32_t e : vertices_[id].incident) {
      const EdgeSlot& es = edges_[e];
      out.push_back(vertices_[es.a == id ? es.b : es.a].key);
    }
    return out;
  }

  std::size_t vertex_count() const { return vertex_count_; }
  std::size_t edge_count() const { return edge_index_.size(); }
  std::size_t cover_size() const { return cover_size_; }

  W cover_weight() const {
    if constexpr (Traits::exact) {
      return cover_weight_;
    } else {
      W sum{};
      for (const auto& s : vertices_)
        if (s.alive && s.tight) sum += s.weight;
      return sum;
    }
  }

  std::vector<V> cover() const {
    std::vector<V> out;
    out.reserve(cover_size_);
    for (const auto& s : vertices_)
      if (s.alive && s.tight) out.push_back(s.key);
    std::sort(out.begin(), out.end());
    return out;
  }

  CoverSnapshot<V, W> snapshot() const { return {cover(), cover_weight()}; }

  std::size_t max_degree() const {
    std::size_t d = 0;
    for (const auto& s : vertices_)
      if (s.alive) d = std::max(d, s.incident.size());
    return d;
  }

  /// f(key, weight, price_sum, tight)
  template <class F>
  void for_each_vertex(F&& f) const {
    for (const auto& s : vertices_)
      if (s.alive) f(s.key, s.weight, s.sum, s.tight);
  }

  /// f(key_a, key_b, price)
  template <class F>
  void for_each_edge(F&& f) const {
    for (const auto& es : edges_)
      if (es.alive) f(vertices_[es.a].key, vertices_[es.b].key, es.price);
  }

  const PricingCounters& counters() const { return counters_; }
  std::size_t last_examined() const { return last_examined_; }
  void reset_counters() { counters_ = {}; }

  /// Largest degree of any vertex touched by an operation since the last reset.
  std::size_t peak_degree() const { return peak_degree_; }
  void reset_peak_degree() { peak_degree_ = 0; }

 private:
  struct VertexSlot {
    V key{};
    W weight{};
    W sum{};
    std::vector<std::uint32_t> incident;
    bool tight = false;
    bool alive = false;
  };
  struct EdgeSlot {
    std::uint32_t a = 0, b = 0;
    std::uint32_t pos_a = 0, pos_b = 0;
    W price{};
    bool alive = false;
  };

  static std::uint64_t pair_key(std::uint32_t a, std::uint32_t b) {
    if (a > b) std::swap(a, b);
    return (static_cast<std::uint64_t>(a) << 32) | b;
  }

  std::uint32_t id_of(const V& v) const {
    auto it = index_.find(v);
    if (it == index_.end()) throw ContractError("unknown vertex");
    return it->second;
  }

  void touch_degree(std::uint32_t id) { peak_degree_ = std::max(peak_degree_, vertices_[id].incident.size()); }

  void set_tight(std::uint32_t id, bool t) {
    VertexSlot& s = vertices_[id];
    if (s.tight == t) return;
    s.tight = t;
    if (t) {
      ++cover_size_;
      cover_weight_ += s.weight;
    } else {
      --cover_size_;
      cover_weight_ -= s.weight;
    }
  }

  void refresh(std::uint32_t id) { set_tight(id, Traits::equal(vertices_[id].sum, vertices_[id].weight)); }

  void set_weight(std::uint32_t id, W w) {
    set_tight(id, false);
    vertices_[id].weight = w;
    refresh(id);
  }

  std::uint32_t new_edge(std::uint32_t a, std::uint32_t b) {
    std::uint32_t e;
    if (!free_edges_.empty()) {
      e = free_edges_.back();
      free_edges_.pop_back();
    } else {
      e = static_cast<std::uint32_t>(edges_.size());
      edges_.emplace_back();
    }
    EdgeSlot& es = edges_[e];
    es.a = a;
    es.b = b;
    es.price = W{};
    es.alive = true;
    es.pos_a = static_cast<std::uint32_t>(vertices_[a].incident.size());
    vertices_[a].incident.push_back(e);
    es.pos_b = static_cast<std::uint32_t>(vertices_[b].incident.size());
    vertices_[b].incident.push_back(e);
    edge_index_.emplace(pair_key(a, b), e);
    return e;
  }

  void unlink(std::uint32_t v, std::uint32_t pos) {
    auto& inc = vertices_[v].incident;
    const std::uint32_t moved = inc.back();
    inc[pos] = moved;
    inc.pop_back();
    if (pos < inc.size()) {
      EdgeSlot& m = edges_[moved];
      (m.a == v ? m.pos_a : m.pos_b) = pos;
    }
  }

  void drop_edge(std::uint32_t e) {
    EdgeSlot& es = edges_[e];
    edge_index_.erase(pair_key(es.a, es.b));
    unlink(es.a, es.pos_a);
    unlink(es.b, es.pos_b);
    es.alive = false;
    free_edges_.push_back(e);
  }

  void collect_uncovered(std::uint32_t v, std::vector<std::uint32_t>& out) {
    for (std::uint32_t e : vertices_[v].incident) {
      ++last_examined_;
      const EdgeSlot& es = edges_[e];
      if (!vertices_[es.a == v ? es.b : es.a].tight) out.push_back(e);
    }
  }

  void raise_prices(std::span<const std::uint32_t> edge_ids) {
    for (std::uint32_t e : edge_ids) {
      EdgeSlot& es = edges_[e];
      VertexSlot& u = vertices_[es.a];
      VertexSlot& v = vertices_[es.b];
      if (u.tight || v.tight) continue;
      const W slack_u = std::max(W{}, u.weight - u.sum);
      const W slack_v = std::max(W{}, v.weight - v.sum);
      const W amount = std::min(slack_u, slack_v);
      es.price += amount;
      u.sum += amount;
      v.sum += amount;
      if (slack_u <= slack_v) u.sum = u.weight;
      if (slack_v <= slack_u) v.sum = v.weight;
      refresh(es.a);
      refresh(es.b);
    }
  }

  std::vector<VertexSlot> vertices_;
  std::vector<EdgeSlot> edges_;
  std::vector<std::uint32_t> free_vertices_, free_edges_;
  std::unordered_map<V, std::uint32_t, Hash> index_;
  std::unordered_map<std::uint64_t, std::uint32_t> edge_index_;
  std::vector<std::uint32_t> scratch_, lost_;
  std::size_t vertex_count_ = 0;
  std::size_t cover_size_ = 0;
  W cover_weight_{};
  PricingCounters counters_;
  std::size_t last_examined_ = 0;
  std::size_t peak_degree_ = 0;
};

}  // namespace tgstc
