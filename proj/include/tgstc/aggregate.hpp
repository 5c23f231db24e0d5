#pragma once

#include <algorithm>
#include <deque>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "tgstc/graph.hpp"
#include "tgstc/temporal_stream.hpp"
#include "tgstc/weighting.hpp"

namespace tgstc {

template <class W>
struct AggEvent {
  enum class Kind { inserted, deleted, weight_changed };

  Kind kind;
  EdgeKey edge;
  W old_weight{};
  W new_weight{};

  friend bool operator==(const AggEvent&, const AggEvent&) = default;
};

template <class W>
using AggDelta = std::vector<AggEvent<W>>;

/// Weighted aggregated graph of the temporal edges currently in a window.
///
/// Each aggregated edge keeps its chronological contact list; its weight is
/// phi(contacts), recomputed whenever the list changes. An edge exists exactly
/// while its contact list is non-empty, so a decay-weighted edge with a
/// single contact stays present with weight 0.
template <WeightingFunction Phi>
class AggregatedGraph {
 public:
  using weight_type = typename Phi::weight_type;
  using Event = AggEvent<weight_type>;

  explicit AggregatedGraph(Phi phi = {}) : phi_(std::move(phi)) {}

  const WeightedGraph<weight_type>& graph() const { return graph_; }
  const Phi& weighting() const { return phi_; }

  const std::deque<Contact>& contacts(const EdgeKey& e) const {
    auto it = contacts_.find(e);
    if (it == contacts_.end()) throw ContractError("no such aggregated edge");
    return it->second;
  }

  /// Applies one window move. `before_event(event, graph)` is invoked for
  /// every event while `graph` still reflects the state prior to it.
  ///
  /// Changes are netted per aggregated edge. Edges touched only by expiries
  /// come first, then edges touched by arrivals, each group in canonical key
  /// order.
  template <class Observer>
  AggDelta<weight_type> apply_window_delta(const WindowDelta& delta, Observer&& before_event) {
    struct Touch {
      std::vector<Timestamp> expired;
      std::vector<Contact> arrived;
    };
    std::unordered_map<EdgeKey, Touch, EdgeKeyHash> touched;
    for (const auto& e : delta.expired) touched[e.key()].expired.push_back(e.t);
    for (const auto& e : delta.arrived) touched[e.key()].arrived.push_back({e.t, e.duration});

    std::vector<EdgeKey> expiry_only, with_arrivals;
    for (const auto& [k, tch] : touched) (tch.arrived.empty() ? expiry_only : with_arrivals).push_back(k);
    std::sort(expiry_only.begin(), expiry_only.end());
    std::sort(with_arrivals.begin(), with_arrivals.end());

    // Expired contacts are matched by timestamp against the list head.
    auto pop_expired = [&](const EdgeKey& k) {
      const auto& expired = touched[k].expired;
      if (expired.empty()) return;
      auto it = contacts_.find(k);
      if (it == contacts_.end() || it->second.size() < expired.size())
        throw ContractError("expiring a contact that is not in the aggregated graph");
      for (Timestamp t : expired) {
        if (it->second.front().t != t) throw ContractError("expired contact does not match the oldest contact");
        it->second.pop_front();
      }
    };

    AggDelta<weight_type> events;
    auto emit = [&](Event ev) {
      before_event(std::as_const(ev), std::as_const(graph_));
      switch (ev.kind) {
        case Event::Kind::inserted: graph_.insert_edge(ev.edge, ev.new_weight); break;
        case Event::Kind::deleted: graph_.erase_edge(ev.edge); break;
        case Event::Kind::weight_changed: graph_.set_weight(ev.edge, ev.new_weight); break;
      }
      events.push_back(ev);
    };

    auto settle = [&](const EdgeKey& k) {
      const bool existed = graph_.has_edge(k);
      const weight_type old_w = existed ? graph_.weight(k) : weight_type{};
      pop_expired(k);
      auto& list = contacts_[k];
      for (auto& c : touched[k].arrived) list.push_back(c);
      if (list.empty()) {
        contacts_.erase(k);
        if (existed) emit({Event::Kind::deleted, k, old_w, weight_type{}});
        return;
      }
      const weight_type new_w = phi_(list);
      if (!existed)
        emit({Event::Kind::inserted, k, weight_type{}, new_w});
      else if (new_w != old_w)
        emit({Event::Kind::weight_changed, k, old_w, new_w});
    };

    for (const auto& k : expiry_only) settle(k);
    for (const auto& k : with_arrivals) settle(k);
    return events;
  }

  AggDelta<weight_type> apply_window_delta(const WindowDelta& delta) {
    return apply_window_delta(delta, [](const Event&, const WeightedGraph<weight_type>&) {});
  }

 private:
  Phi phi_;
  WeightedGraph<weight_type> graph_;
  std::unordered_map<EdgeKey, std::deque<Contact>, EdgeKeyHash> contacts_;
};

/// Aggregates a whole edge list in one step (non-streaming use).
template <WeightingFunction Phi>
AggregatedGraph<Phi> aggregate(std::span<const TemporalEdge> edges, Phi phi = {}) {
  AggregatedGraph<Phi> a(std::move(phi));
  WindowDelta d;
  d.arrived.assign(edges.begin(), edges.end());
  a.apply_window_delta(d);
  return a;
}

}  // namespace tgstc
