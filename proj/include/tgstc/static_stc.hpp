#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <set>
#include <string>
#include <vector>

#include "tgstc/graph.hpp"
#include "tgstc/wedge.hpp"

namespace tgstc {

/// Partition of the aggregated edges into strong and weak, both ascending.
template <class W>
struct StrongWeakLabeling {
  std::vector<EdgeKey> strong;
  std::vector<EdgeKey> weak;
  W strong_weight{};
  W weak_weight{};

  bool is_strong(const EdgeKey& e) const { return std::binary_search(strong.begin(), strong.end(), e); }
};

/// Weak edges are the wedge-graph vertices flagged in `in_cover`.
template <class W>
StrongWeakLabeling<W> labeling_from_cover(const WedgeGraph<W>& g, const std::vector<bool>& in_cover) {
  StrongWeakLabeling<W> out;
  for (std::size_t i = 0; i < g.vertex_count(); ++i) {
    if (in_cover[i]) {
      out.weak.push_back(g.vertices[i]);
      out.weak_weight += g.weights[i];
    } else {
      out.strong.push_back(g.vertices[i]);
      out.strong_weight += g.weights[i];
    }
  }
  return out;
}

/// True iff no open wedge of A has both of its edges strong.
template <class W>
bool is_stc_feasible(const WeightedGraph<W>& a, const StrongWeakLabeling<W>& lab) {
  for (NodeId v : a.nodes()) {
    std::vector<NodeId> strong_nb;
    for (NodeId x : a.neighbors(v))
      if (lab.is_strong(EdgeKey(v, x))) strong_nb.push_back(x);
    for (std::size_t i = 0; i < strong_nb.size(); ++i)
      for (std::size_t j = i + 1; j < strong_nb.size(); ++j)
        if (!a.has_edge(strong_nb[i], strong_nb[j])) return false;
  }
  return true;
}

template <class W>
struct PricingResult {
  std::vector<bool> in_cover;
  std::vector<W> prices;  // parallel to WedgeGraph::edges
  std::size_t examined = 0;
};

/// One pass of the pricing method over the wedge-graph edges in stored order.
template <class W>
PricingResult<W> static_pricing_cover(const WedgeGraph<W>& g) {
  using T = WeightTraits<W>;
  PricingResult<W> r;
  const std::size_t n = g.vertex_count();
  std::vector<W> sum(n, W{});
  r.in_cover.assign(n, false);
  r.prices.assign(g.edge_count(), W{});
  for (std::size_t i = 0; i < n; ++i) r.in_cover[i] = T::equal(W{}, g.weights[i]);
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    ++r.examined;
    auto [a, b] = g.edges[e];
    if (r.in_cover[a] || r.in_cover[b]) continue;
    const W sa = std::max(W{}, g.weights[a] - sum[a]);
    const W sb = std::max(W{}, g.weights[b] - sum[b]);
    const W amount = std::min(sa, sb);
    r.prices[e] = amount;
    sum[a] = sa <= sb ? g.weights[a] : sum[a] + amount;
    sum[b] = sb <= sa ? g.weights[b] : sum[b] + amount;
    r.in_cover[a] = T::equal(sum[a], g.weights[a]);
    r.in_cover[b] = T::equal(sum[b], g.weights[b]);
  }
  return r;
}

/// Weighted pricing 2-approximation: W(A), pricing cover, weak = cover.
template <class W>
StrongWeakLabeling<W> stc_pricing(const WeightedGraph<W>& a) {
  auto g = build_wedge_graph(a);
  return labeling_from_cover(g, static_pricing_cover(g).in_cover);
}

/// Greedy maximal matching on W(A) in canonical edge order; both endpoints
/// of each matched edge become weak.
template <class W>
StrongWeakLabeling<W> stc_matching(const WeightedGraph<W>& a) {
  auto g = build_wedge_graph(a);
  std::vector<bool> matched(g.vertex_count(), false);
  for (auto [x, y] : g.edges) {
    if (matched[x] || matched[y]) continue;
    matched[x] = matched[y] = true;
  }
  return labeling_from_cover(g, matched);
}

/// Repeatedly takes the highest-degree wedge-graph vertex (lowest canonical
/// key on ties) into the cover and deletes its incident edges.
template <class W>
StrongWeakLabeling<W> stc_highdeg(const WeightedGraph<W>& a) {
  auto g = build_wedge_graph(a);
  auto adj = g.adjacency();
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> deg(n);
  std::vector<bool> chosen(n, false);
  // (-degree, index) orders by degree desc, then canonical key asc
  std::set<std::pair<std::int64_t, std::uint32_t>> queue;
  for (std::uint32_t i = 0; i < n; ++i) {
    deg[i] = adj[i].size();
    if (deg[i] > 0) queue.emplace(-static_cast<std::int64_t>(deg[i]), i);
  }
  while (!queue.empty()) {
    auto [negd, v] = *queue.begin();
    queue.erase(queue.begin());
    chosen[v] = true;
    for (std::uint32_t x : adj[v]) {
      if (chosen[x]) continue;
      queue.erase({-static_cast<std::int64_t>(deg[x]), x});
      if (--deg[x] > 0) queue.emplace(-static_cast<std::int64_t>(deg[x]), x);
    }
    deg[v] = 0;
  }
  return labeling_from_cover(g, chosen);
}

enum class ExactObjective { weighted, unweighted };

namespace detail {

/// Branch and bound for minimum (weighted) vertex cover on <= 64 vertices.
/// Branches on the vertex of highest residual degree (take it, or take all
/// its remaining neighbours); prunes with the pricing lower bound of the
/// residual graph.
template <class W>
class CoverBranchAndBound {
 public:
  CoverBranchAndBound(const WedgeGraph<W>& g, std::vector<W> weights) : w_(std::move(weights)) {
    n_ = g.vertex_count();
    nbr_.assign(n_, 0);
    for (auto [a, b] : g.edges) {
      nbr_[a] |= bit(b);
      nbr_[b] |= bit(a);
      edges_.emplace_back(a, b);
    }
  }

  std::uint64_t solve(std::uint64_t initial, W initial_cost) {
    best_ = initial;
    best_cost_ = initial_cost;
    search(0, 0, W{});
    return best_;
  }

 private:
  static std::uint64_t bit(std::uint32_t i) { return std::uint64_t{1} << i; }

  W lower_bound(std::uint64_t taken) const {
    std::vector<W> sum(n_, W{});
    W total{};
    for (auto [a, b] : edges_) {
      if ((taken & bit(a)) || (taken & bit(b))) continue;
      W amount = std::min(w_[a] - sum[a], w_[b] - sum[b]);
      if (amount <= W{}) continue;
      sum[a] += amount;
      sum[b] += amount;
      total += amount;
    }
    return total;
  }

  void search(std::uint64_t taken, std::uint64_t excluded, W cost) {
    if (!(cost < best_cost_)) return;
    // pick the undecided vertex with most uncovered incident edges
    int pick = -1;
    int pick_deg = 0;
    for (std::uint32_t v = 0; v < n_; ++v) {
      if ((taken | excluded) & bit(v)) continue;
      int d = std::popcount(nbr_[v] & ~taken);
      if (d > pick_deg) {
        pick_deg = d;
        pick = static_cast<int>(v);
      }
    }
    if (pick < 0) {
      if (cost < best_cost_) {
        best_cost_ = cost;
        best_ = taken;
      }
      return;
    }
    if (!(cost + lower_bound(taken) < best_cost_)) return;
    const std::uint32_t v = static_cast<std::uint32_t>(pick);
    search(taken | bit(v), excluded, cost + w_[v]);

    const std::uint64_t forced = nbr_[v] & ~taken;
    if (forced & excluded) return;
    W extra{};
    for (std::uint32_t x = 0; x < n_; ++x)
      if (forced & bit(x)) extra += w_[x];
    search(taken | forced, excluded | bit(v), cost + extra);
  }

  std::size_t n_ = 0;
  std::vector<W> w_;
  std::vector<std::uint64_t> nbr_;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges_;
  std::uint64_t best_ = 0;
  W best_cost_{};
};

}  // namespace detail

/// Exact minimum-weight (or minimum-cardinality) weak set via branch and
/// bound on W(A). Throws CapacityError when |V(W)| exceeds `cap`.
template <class W>
StrongWeakLabeling<W> stc_exact(const WeightedGraph<W>& a, ExactObjective objective = ExactObjective::weighted,
                                std::size_t cap = 20) {
  auto g = build_wedge_graph(a);
  if (g.vertex_count() > cap || g.vertex_count() > 64)
    throw CapacityError("exact solver: wedge graph has " + std::to_string(g.vertex_count()) +
                        " vertices (cap " + std::to_string(std::min<std::size_t>(cap, 64)) +
                        "); export an ILP model instead");
  std::vector<W> cost(g.vertex_count());
  for (std::size_t i = 0; i < cost.size(); ++i)
    cost[i] = objective == ExactObjective::weighted ? g.weights[i] : W{1};

  // start from the pricing cover as incumbent
  WedgeGraph<W> costed = g;
  costed.weights = cost;
  auto init = static_pricing_cover(costed).in_cover;
  const auto adj = g.adjacency();
  std::uint64_t init_mask = 0;
  W init_cost{};
  for (std::size_t i = 0; i < init.size(); ++i)
    if (init[i] && !adj[i].empty()) {
      init_mask |= std::uint64_t{1} << i;
      init_cost += cost[i];
    }

  detail::CoverBranchAndBound<W> bb(g, cost);
  const std::uint64_t best = bb.solve(init_mask, init_cost);
  std::vector<bool> in_cover(g.vertex_count());
  for (std::size_t i = 0; i < in_cover.size(); ++i) in_cover[i] = (best >> i) & 1U;
  return labeling_from_cover(g, in_cover);
}

}  // namespace tgstc
