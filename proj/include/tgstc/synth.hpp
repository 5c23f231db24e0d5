#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <ostream>
#include <random>
#include <set>
#include <tuple>
#include <vector>

#include "tgstc/temporal_stream.hpp"

namespace tgstc {

/// Parameters of the synthetic temporal network generator.
///
/// A fixed pool of node pairs (biased towards nearby node ids so that
/// triangles and wedges appear) receives contacts with power-law popularity.
/// Each pair is active around its own random point in time; `burstiness` is
/// the standard deviation of its contact times as a fraction of the lifetime.
struct SynthConfig {
  std::size_t nodes = 100;
  std::size_t edges = 5000;
  Timestamp lifetime = 1000;
  std::size_t pairs = 0;       // 0 selects 3 * nodes
  std::size_t locality = 8;    // max id offset between pair endpoints
  double exponent = 1.2;       // popularity ~ rank^-exponent
  double burstiness = 0.05;
  std::uint64_t seed = 1;
};

inline std::vector<TemporalEdge> generate_synthetic_stream(const SynthConfig& cfg) {
  if (cfg.nodes < 2) throw ConfigError("synthetic stream needs at least 2 nodes");
  if (cfg.lifetime < 1) throw ConfigError("lifetime must be >= 1");
  if (cfg.exponent < 0) throw ConfigError("exponent must be >= 0");
  if (!(cfg.burstiness > 0)) throw ConfigError("burstiness must be > 0");
  if (cfg.locality < 1) throw ConfigError("locality must be >= 1");
  if (cfg.edges == 0) return {};

  const std::size_t max_pairs = std::min(cfg.nodes * (cfg.nodes - 1) / 2, cfg.nodes * cfg.locality);
  const std::size_t n_pairs = std::min(cfg.pairs == 0 ? 3 * cfg.nodes : cfg.pairs, max_pairs);

  std::mt19937_64 rng(cfg.seed);
  std::uniform_int_distribution<std::size_t> pick_node(0, cfg.nodes - 1);
  std::uniform_int_distribution<std::size_t> pick_offset(1, std::min(cfg.locality, cfg.nodes - 1));

  std::set<EdgeKey> seen;
  std::vector<EdgeKey> pool;
  for (std::size_t attempts = 0; pool.size() < n_pairs && attempts < 100 * n_pairs; ++attempts) {
    const std::size_t u = pick_node(rng);
    const std::size_t v = (u + pick_offset(rng)) % cfg.nodes;
    if (u == v) continue;
    EdgeKey k(u, v);
    if (seen.insert(k).second) pool.push_back(k);
  }

  std::vector<double> popularity(pool.size());
  for (std::size_t i = 0; i < pool.size(); ++i) popularity[i] = std::pow(static_cast<double>(i + 1), -cfg.exponent);
  std::discrete_distribution<std::size_t> pick_pair(popularity.begin(), popularity.end());

  const double span = static_cast<double>(cfg.lifetime);
  std::uniform_real_distribution<double> pick_center(0.0, span);
  std::vector<double> center(pool.size());
  for (auto& c : center) c = pick_center(rng);
  std::normal_distribution<double> jitter(0.0, std::max(1.0, cfg.burstiness * span));

  std::vector<TemporalEdge> out;
  out.reserve(cfg.edges);
  for (std::size_t i = 0; i < cfg.edges; ++i) {
    const std::size_t p = pick_pair(rng);
    double t = std::round(center[p] + jitter(rng));
    t = std::clamp(t, 0.0, span - 1.0);
    out.emplace_back(pool[p].u, pool[p].v, static_cast<Timestamp>(t));
  }
  std::sort(out.begin(), out.end(), [](const TemporalEdge& a, const TemporalEdge& b) {
    return std::tie(a.t, a.u, a.v) < std::tie(b.t, b.u, b.v);
  });
  return out;
}

inline void write_edge_list(std::ostream& os, const std::vector<TemporalEdge>& edges) {
  for (const auto& e : edges) {
    os << e.u << ' ' << e.v << ' ' << e.t;
    if (e.duration) os << ' ' << *e.duration;
    os << '\n';
  }
}

}  // namespace tgstc
