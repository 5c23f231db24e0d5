#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <unordered_map>
#include <vector>

#include "tgstc/types.hpp"

namespace tgstc {

/// Simple undirected edge-weighted graph with sorted neighbor lists.
template <class W>
class WeightedGraph {
 public:
  using weight_type = W;

  bool has_edge(NodeId a, NodeId b) const { return a != b && edges_.contains(EdgeKey(a, b)); }
  bool has_edge(const EdgeKey& e) const { return edges_.contains(e); }

  W weight(const EdgeKey& e) const {
    auto it = edges_.find(e);
    if (it == edges_.end()) throw ContractError("no such edge");
    return it->second;
  }

  void insert_edge(const EdgeKey& e, W w) {
    if (e.u == e.v) throw ContractError("self-loop");
    if (!edges_.emplace(e, w).second) throw ContractError("edge already present");
    link(e.u, e.v);
    link(e.v, e.u);
  }

  void erase_edge(const EdgeKey& e) {
    if (edges_.erase(e) == 0) throw ContractError("erasing a missing edge");
    unlink(e.u, e.v);
    unlink(e.v, e.u);
  }

  void set_weight(const EdgeKey& e, W w) {
    auto it = edges_.find(e);
    if (it == edges_.end()) throw ContractError("no such edge");
    it->second = w;
  }

  std::span<const NodeId> neighbors(NodeId v) const {
    auto it = adj_.find(v);
    if (it == adj_.end()) return {};
    return it->second;
  }

  std::size_t degree(NodeId v) const { return neighbors(v).size(); }
  std::size_t edge_count() const { return edges_.size(); }
  std::size_t node_count() const { return adj_.size(); }

  std::size_t max_degree() const {
    std::size_t d = 0;
    for (const auto& [v, nb] : adj_) d = std::max(d, nb.size());
    return d;
  }

  /// Nodes with at least one incident edge, ascending.
  std::vector<NodeId> nodes() const {
    std::vector<NodeId> out;
    out.reserve(adj_.size());
    for (const auto& [v, nb] : adj_) out.push_back(v);
    std::sort(out.begin(), out.end());
    return out;
  }

  /// Edges in ascending canonical order.
  std::vector<EdgeKey> edge_keys() const {
    std::vector<EdgeKey> out;
    out.reserve(edges_.size());
    for (const auto& [e, w] : edges_) out.push_back(e);
    std::sort(out.begin(), out.end());
    return out;
  }

  const std::unordered_map<EdgeKey, W, EdgeKeyHash>& weights() const { return edges_; }

  friend bool operator==(const WeightedGraph& a, const WeightedGraph& b) { return a.edges_ == b.edges_; }

 private:
  void link(NodeId v, NodeId x) {
    auto& nb = adj_[v];
    nb.insert(std::lower_bound(nb.begin(), nb.end(), x), x);
  }
  void unlink(NodeId v, NodeId x) {
    auto it = adj_.find(v);
    auto& nb = it->second;
    nb.erase(std::lower_bound(nb.begin(), nb.end(), x));
    if (nb.empty()) adj_.erase(it);
  }

  std::unordered_map<EdgeKey, W, EdgeKeyHash> edges_;
  std::unordered_map<NodeId, std::vector<NodeId>> adj_;
};

}  // namespace tgstc
