#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "tgstc/aggregate.hpp"
#include "tgstc/dynamic_pricing.hpp"
#include "tgstc/graph.hpp"

namespace tgstc {

/// Vertex-weighted wedge graph of an aggregated graph A.
///
/// Vertex i stands for the aggregated edge `vertices[i]` (ascending canonical
/// order) and carries its weight. Each edge joins two aggregated edges that
/// share a node and form an open wedge; pairs are stored (lo, hi) with
/// lo < hi, sorted ascending. Every aggregated edge is a vertex, including
/// those without incident wedges.
template <class W>
struct WedgeGraph {
  std::vector<EdgeKey> vertices;
  std::vector<W> weights;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;

  std::size_t vertex_count() const { return vertices.size(); }
  std::size_t edge_count() const { return edges.size(); }

  std::uint32_t index_of(const EdgeKey& k) const {
    auto it = std::lower_bound(vertices.begin(), vertices.end(), k);
    if (it == vertices.end() || *it != k) throw ContractError("edge is not a wedge-graph vertex");
    return static_cast<std::uint32_t>(it - vertices.begin());
  }

  std::vector<std::vector<std::uint32_t>> adjacency() const {
    std::vector<std::vector<std::uint32_t>> adj(vertices.size());
    for (auto [a, b] : edges) {
      adj[a].push_back(b);
      adj[b].push_back(a);
    }
    return adj;
  }

  friend bool operator==(const WedgeGraph&, const WedgeGraph&) = default;
};

template <class W>
using WedgeRequest = UpdateRequest<EdgeKey, W>;

template <class W>
using WedgeSequence = UpdateSequence<EdgeKey, W>;

template <class W>
using WedgeCover = DynamicPricingCover<EdgeKey, W, EdgeKeyHash>;

/// Number of open wedges (v, {u, w}) of A.
template <class W>
std::size_t count_wedges(const WeightedGraph<W>& a) {
  std::size_t n = 0;
  for (NodeId v : a.nodes()) {
    auto nb = a.neighbors(v);
    for (std::size_t i = 0; i < nb.size(); ++i)
      for (std::size_t j = i + 1; j < nb.size(); ++j)
        if (!a.has_edge(nb[i], nb[j])) ++n;
  }
  return n;
}

template <class W>
WedgeGraph<W> build_wedge_graph(const WeightedGraph<W>& a) {
  WedgeGraph<W> g;
  g.vertices = a.edge_keys();
  g.weights.reserve(g.vertices.size());
  for (const auto& k : g.vertices) g.weights.push_back(a.weight(k));

  std::vector<std::uint32_t> idx;
  for (NodeId v : a.nodes()) {
    auto nb = a.neighbors(v);
    idx.clear();
    for (NodeId x : nb) idx.push_back(g.index_of(EdgeKey(v, x)));
    for (std::size_t i = 0; i < nb.size(); ++i)
      for (std::size_t j = i + 1; j < nb.size(); ++j)
        if (!a.has_edge(nb[i], nb[j])) g.edges.emplace_back(std::min(idx[i], idx[j]), std::max(idx[i], idx[j]));
  }
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

/// Appends to `out` the cover requests that turn W(before) into W(after),
/// where `after` is `before` with `ev` applied.
///
/// Inserting {v,w}: every x adjacent to exactly one endpoint opens a wedge
/// (one new W edge); every common neighbour x closes the triangle x,v,w and
/// destroys the wedge (x,{v,w}). Deletion is the mirror image.
template <class W>
void wedge_updates(const WeightedGraph<W>& before, const AggEvent<W>& ev, WedgeSequence<W>& out) {
  using R = WedgeRequest<W>;
  const EdgeKey vw = ev.edge;
  const NodeId v = vw.u, w = vw.v;

  switch (ev.kind) {
    case AggEvent<W>::Kind::inserted: {
      if (before.has_edge(vw)) throw ContractError("inserting an edge already in the aggregated graph");
      out.push_back(R::add_vertex(vw, ev.new_weight));
      for (NodeId x : before.neighbors(v)) {
        if (before.has_edge(x, w))
          out.push_back(R::del_edge(EdgeKey(x, v), EdgeKey(x, w)));
        else
          out.push_back(R::ins_edge(EdgeKey(v, x), vw));
      }
      for (NodeId x : before.neighbors(w))
        if (!before.has_edge(x, v)) out.push_back(R::ins_edge(EdgeKey(w, x), vw));
      break;
    }
    case AggEvent<W>::Kind::deleted: {
      if (!before.has_edge(vw)) throw ContractError("deleting an edge missing from the aggregated graph");
      for (NodeId x : before.neighbors(v)) {
        if (x == w) continue;
        if (before.has_edge(x, w))
          out.push_back(R::ins_edge(EdgeKey(x, v), EdgeKey(x, w)));
        else
          out.push_back(R::del_edge(EdgeKey(v, x), vw));
      }
      for (NodeId x : before.neighbors(w))
        if (x != v && !before.has_edge(x, v)) out.push_back(R::del_edge(EdgeKey(w, x), vw));
      out.push_back(R::remove_vertex(vw));
      break;
    }
    case AggEvent<W>::Kind::weight_changed: {
      if (!before.has_edge(vw)) throw ContractError("reweighting an edge missing from the aggregated graph");
      if (ev.new_weight > ev.old_weight)
        out.push_back(R::inc_weight(vw, ev.new_weight));
      else if (ev.new_weight < ev.old_weight)
        out.push_back(R::dec_weight(vw, ev.new_weight));
      break;
    }
  }
}

template <class W>
WedgeSequence<W> wedge_updates(const WeightedGraph<W>& before, const AggEvent<W>& ev) {
  WedgeSequence<W> out;
  wedge_updates(before, ev, out);
  return out;
}

/// Canonical wedge graph held by a dynamic cover, for exact comparison
/// against build_wedge_graph.
template <class W>
WedgeGraph<W> wedge_graph_of(const WedgeCover<W>& cover) {
  WedgeGraph<W> g;
  std::vector<std::pair<EdgeKey, W>> vs;
  vs.reserve(cover.vertex_count());
  cover.for_each_vertex([&](const EdgeKey& k, W w, W, bool) { vs.emplace_back(k, w); });
  std::sort(vs.begin(), vs.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  for (auto& [k, w] : vs) {
    g.vertices.push_back(k);
    g.weights.push_back(w);
  }
  g.edges.reserve(cover.edge_count());
  cover.for_each_edge([&](const EdgeKey& x, const EdgeKey& y, W) {
    std::uint32_t a = g.index_of(x), b = g.index_of(y);
    g.edges.emplace_back(std::min(a, b), std::max(a, b));
  });
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

}  // namespace tgstc
