#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include "tgstc/graph.hpp"
#include "tgstc/static_stc.hpp"

namespace tgstc {

struct StrongStats {
  std::size_t n_strong = 0;
  std::size_t n_weak = 0;
  double pct_strong = 0.0;
  double mean_strong_weight = 0.0;  // 0 when strong_empty
  double mean_weak_weight = 0.0;    // 0 when weak_empty
  bool strong_empty = true;
  bool weak_empty = true;
};

template <class W>
StrongStats strong_stats(const WeightedGraph<W>& a, const StrongWeakLabeling<W>& lab) {
  StrongStats s;
  s.n_strong = lab.strong.size();
  s.n_weak = lab.weak.size();
  const std::size_t m = a.edge_count();
  if (m > 0) s.pct_strong = 100.0 * static_cast<double>(s.n_strong) / static_cast<double>(m);
  double ws = 0, ww = 0;
  for (const auto& e : lab.strong) ws += static_cast<double>(a.weight(e));
  for (const auto& e : lab.weak) ww += static_cast<double>(a.weight(e));
  s.strong_empty = s.n_strong == 0;
  s.weak_empty = s.n_weak == 0;
  if (!s.strong_empty) s.mean_strong_weight = ws / static_cast<double>(s.n_strong);
  if (!s.weak_empty) s.mean_weak_weight = ww / static_cast<double>(s.n_weak);
  return s;
}

/// How the reference set H of "important" edges is ranked.
/// `degree` ranks an edge {u,v} by d(u) + d(v) in the aggregated graph.
enum class RankBy { weight, degree };

struct PrecisionRecall {
  std::size_t k = 0;          // requested
  std::size_t h_size = 0;     // |H|, min(k, |E|)
  std::size_t hits = 0;       // |H ∩ S|
  std::size_t s_size = 0;     // |S|
  double precision = 0.0;     // hits / |S|, 0 when S is empty
  double recall = 0.0;        // hits / |H|, 0 when H is empty
  bool truncated = false;     // k exceeded |E|
};

/// The k top-ranked edges, ties broken by canonical key.
template <class W>
std::vector<EdgeKey> top_k_edges(const WeightedGraph<W>& a, std::size_t k, RankBy rank = RankBy::weight) {
  auto keys = a.edge_keys();
  auto score = [&](const EdgeKey& e) -> double {
    if (rank == RankBy::weight) return static_cast<double>(a.weight(e));
    return static_cast<double>(a.degree(e.u) + a.degree(e.v));
  };
  std::stable_sort(keys.begin(), keys.end(),
                   [&](const EdgeKey& x, const EdgeKey& y) { return score(x) > score(y); });
  if (keys.size() > k) keys.resize(k);
  return keys;
}

template <class W>
PrecisionRecall precision_recall_topk(const WeightedGraph<W>& a, const StrongWeakLabeling<W>& lab, std::size_t k,
                                      RankBy rank = RankBy::weight) {
  if (k == 0) throw ConfigError("top-k requires k >= 1");
  PrecisionRecall pr;
  pr.k = k;
  pr.truncated = k > a.edge_count();
  const auto h = top_k_edges(a, k, rank);
  pr.h_size = h.size();
  pr.s_size = lab.strong.size();
  for (const auto& e : h)
    if (lab.is_strong(e)) ++pr.hits;
  if (pr.s_size > 0) pr.precision = static_cast<double>(pr.hits) / static_cast<double>(pr.s_size);
  if (pr.h_size > 0) pr.recall = static_cast<double>(pr.hits) / static_cast<double>(pr.h_size);
  return pr;
}

}  // namespace tgstc
