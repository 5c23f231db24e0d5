#pragma once

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "tgstc/aggregate.hpp"
#include "tgstc/static_stc.hpp"
#include "tgstc/temporal_stream.hpp"
#include "tgstc/wedge.hpp"

namespace tgstc {

enum class StreamMode {
  dynamic,    // maintain W and the cover under the update sequence
  recompute,  // rebuild W and run static pricing for every changed window
};

struct StreamConfig {
  Timestamp delta = 1;
  Timestamp stride = 1;
  StreamMode mode = StreamMode::dynamic;
  bool keep_labeling = true;    // materialize strong/weak edge lists per window
  bool instrument = false;      // compute per-iteration degree bounds (O(|V|) per window)
  bool emit_unchanged = true;   // report windows whose edge set did not change
};

/// Measured work of one iteration next to the bound xi * d_A * d_W^2, where
/// xi = max(|expired|, |arrived|) and the degrees are the largest seen in A
/// and W before, during, or after the iteration.
struct IterationCost {
  std::size_t expired = 0;
  std::size_t arrived = 0;
  std::size_t max_degree_a = 0;
  std::size_t max_degree_w = 0;
  std::uint64_t examined = 0;
  double bound = 0.0;

  bool within_bound() const { return static_cast<double>(examined) <= bound; }
};

template <class W>
struct WindowResult {
  TimeWindow window;
  bool changed = true;
  std::size_t n_strong = 0;
  std::size_t n_weak = 0;
  W weak_weight{};
  std::vector<EdgeKey> strong;  // filled when keep_labeling and changed
  std::vector<EdgeKey> weak;
  std::size_t wedge_vertices = 0;
  std::size_t wedge_edges = 0;
  std::size_t sigma_length = 0;
  std::uint64_t examined = 0;
  std::int64_t wall_ns = 0;
  std::optional<IterationCost> cost;
};

/// Sliding-window strong triadic closure over a chronological edge stream.
template <WeightingFunction Phi>
class StreamingStc {
 public:
  using weight_type = typename Phi::weight_type;
  using W = weight_type;
  using Result = WindowResult<W>;
  /// (event, aggregated graph before the event, requests emitted for it)
  using EventHook = std::function<void(const AggEvent<W>&, const WeightedGraph<W>&, std::span<const WedgeRequest<W>>)>;

  explicit StreamingStc(StreamConfig cfg, Phi phi = {})
      : cfg_(cfg), buffer_(cfg.delta), agg_(std::move(phi)) {
    if (cfg.stride < 1) throw ConfigError("stride must be >= 1");
  }

  void push(TemporalEdge e) { buffer_.push(std::move(e)); }

  void set_event_hook(EventHook hook) { hook_ = std::move(hook); }

  Result advance(Timestamp t_start) {
    const auto t0 = std::chrono::steady_clock::now();
    WindowDelta delta = buffer_.advance_to(t_start);
    Result r;
    r.window = *buffer_.window();

    if (delta.empty() && last_) {
      r = *last_;
      r.window = *buffer_.window();
      r.changed = false;
      r.strong.clear();
      r.weak.clear();
      r.sigma_length = 0;
      r.examined = 0;
      r.cost.reset();
      r.wall_ns = elapsed(t0);
      return r;
    }

    IterationCost cost;
    cost.expired = delta.expired.size();
    cost.arrived = delta.arrived.size();
    if (cfg_.instrument) {
      cost.max_degree_a = agg_.graph().max_degree();
      cost.max_degree_w = current_wedge_max_degree();
      cover_.reset_peak_degree();
    }

    const std::uint64_t examined_before = cover_.counters().examined;
    std::size_t sigma_len = 0;
    agg_.apply_window_delta(delta, [&](const AggEvent<W>& ev, const WeightedGraph<W>& before) {
      if (cfg_.instrument) {
        const std::size_t grow = ev.kind == AggEvent<W>::Kind::inserted ? 1 : 0;
        cost.max_degree_a = std::max({cost.max_degree_a, before.degree(ev.edge.u) + grow, before.degree(ev.edge.v) + grow});
      }
      if (cfg_.mode != StreamMode::dynamic && !hook_) return;
      sigma_.clear();
      wedge_updates(before, ev, sigma_);
      sigma_len += sigma_.size();
      if (hook_) hook_(ev, before, sigma_);
      if (cfg_.mode == StreamMode::dynamic)
        for (const auto& req : sigma_) cover_.apply(req);
    });
    r.sigma_length = sigma_len;

    if (cfg_.mode == StreamMode::dynamic) {
      r.examined = cover_.counters().examined - examined_before;
      r.n_weak = cover_.cover_size();
      r.weak_weight = cover_.cover_weight();
      r.wedge_vertices = cover_.vertex_count();
      r.wedge_edges = cover_.edge_count();
      if (cfg_.keep_labeling) {
        r.weak = cover_.cover();
        cover_.for_each_vertex([&](const EdgeKey& k, W, W, bool tight) {
          if (!tight) r.strong.push_back(k);
        });
        std::sort(r.strong.begin(), r.strong.end());
      }
    } else {
      rebuilt_ = build_wedge_graph(agg_.graph());
      auto pr = static_pricing_cover(rebuilt_);
      r.examined = pr.examined;
      r.wedge_vertices = rebuilt_.vertex_count();
      r.wedge_edges = rebuilt_.edge_count();
      for (std::size_t i = 0; i < rebuilt_.vertex_count(); ++i) {
        if (pr.in_cover[i]) {
          ++r.n_weak;
          r.weak_weight += rebuilt_.weights[i];
          if (cfg_.keep_labeling) r.weak.push_back(rebuilt_.vertices[i]);
        } else if (cfg_.keep_labeling) {
          r.strong.push_back(rebuilt_.vertices[i]);
        }
      }
    }
    r.n_strong = agg_.graph().edge_count() - r.n_weak;

    if (cfg_.instrument) {
      cost.max_degree_a = std::max(cost.max_degree_a, agg_.graph().max_degree());
      cost.max_degree_w = std::max({cost.max_degree_w, current_wedge_max_degree(), cover_.peak_degree()});
      cost.examined = r.examined;
      const double xi = static_cast<double>(std::max(cost.expired, cost.arrived));
      const double dw = static_cast<double>(cost.max_degree_w);
      cost.bound = xi * static_cast<double>(cost.max_degree_a) * dw * dw;
      r.cost = cost;
    }
    r.wall_ns = elapsed(t0);
    last_ = r;
    last_->strong.clear();
    last_->weak.clear();
    return r;
  }

  const AggregatedGraph<Phi>& aggregated() const { return agg_; }
  const WindowBuffer& buffer() const { return buffer_; }
  const WedgeCover<W>& cover() const { return cover_; }
  const StreamConfig& config() const { return cfg_; }

  /// Current wedge graph: maintained (dynamic) or last rebuilt (recompute).
  WedgeGraph<W> wedge_graph() const {
    return cfg_.mode == StreamMode::dynamic ? wedge_graph_of(cover_) : rebuilt_;
  }

  /// Earliest window start at which the window's edge set differs from the
  /// current one, given the time of the next unread edge. nullopt when
  /// nothing remains.
  std::optional<Timestamp> next_change(std::optional<Timestamp> next_edge_time) const {
    std::optional<Timestamp> next;
    if (!buffer_.contents().empty()) next = buffer_.contents().front().t + 1;
    std::optional<Timestamp> arrival;
    if (!buffer_.pending().empty()) arrival = buffer_.pending().front().t;
    else if (next_edge_time) arrival = *next_edge_time;
    if (arrival) {
      Timestamp a = *arrival - cfg_.delta + 1;
      next = next ? std::min(*next, a) : a;
    }
    return next;
  }

 private:
  static std::int64_t elapsed(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - t0).count();
  }

  std::size_t current_wedge_max_degree() const {
    if (cfg_.mode == StreamMode::dynamic) return cover_.max_degree();
    std::vector<std::size_t> deg(rebuilt_.vertex_count(), 0);
    std::size_t d = 0;
    for (auto [a, b] : rebuilt_.edges) d = std::max({d, ++deg[a], ++deg[b]});
    return d;
  }

  StreamConfig cfg_;
  WindowBuffer buffer_;
  AggregatedGraph<Phi> agg_;
  WedgeCover<W> cover_;
  WedgeGraph<W> rebuilt_;
  WedgeSequence<W> sigma_;
  EventHook hook_;
  std::optional<Result> last_;
};

/// Drives a StreamingStc over a pull source (`next_edge()` returning
/// std::optional<TemporalEdge>) and hands every window result to `sink`.
/// Windows start at the first timestamp and continue through
/// max(t_min, t_max - delta + 1). Returns the number of windows emitted.
template <WeightingFunction Phi, class Source, class Sink>
std::size_t run_stream(Source&& next_edge, const StreamConfig& cfg, Sink&& sink, Phi phi = {}) {
  StreamingStc<Phi> stc(cfg, std::move(phi));
  std::optional<TemporalEdge> look = next_edge();
  if (!look) return 0;
  const Timestamp t_min = look->t;
  Timestamp t_last = look->t;
  std::size_t emitted = 0;

  Timestamp ts = t_min;
  for (;;) {
    const Timestamp te = ts + cfg.delta - 1;
    while (look && look->t <= te) {
      if (look->t < t_last) throw StreamOrderError("timestamp " + std::to_string(look->t) + " precedes " + std::to_string(t_last));
      t_last = look->t;
      stc.push(std::move(*look));
      look = next_edge();
    }
    auto result = stc.advance(ts);
    if (cfg.emit_unchanged || result.changed) {
      sink(std::as_const(result));
      ++emitted;
    }

    const Timestamp last_start = std::max(t_min, t_last - cfg.delta + 1);
    Timestamp next = ts + cfg.stride;
    if (!cfg.emit_unchanged) {
      auto change = stc.next_change(look ? std::optional<Timestamp>(look->t) : std::nullopt);
      if (!change) break;
      if (*change > next) next += ((*change - next + cfg.stride - 1) / cfg.stride) * cfg.stride;
    }
    if (!look && next > last_start) break;
    ts = next;
  }
  return emitted;
}

}  // namespace tgstc
