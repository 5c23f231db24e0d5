#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "tgstc/metrics.hpp"
#include "tgstc/stream_stc.hpp"
#include "tgstc/synth.hpp"

using namespace tgstc;

namespace {

template <class Phi = FrequencyWeight>
std::vector<WindowResult<typename Phi::weight_type>> run_all(const std::vector<TemporalEdge>& es, StreamConfig cfg) {
  std::vector<WindowResult<typename Phi::weight_type>> out;
  std::size_t i = 0;
  run_stream<Phi>([&]() -> std::optional<TemporalEdge> { return i < es.size() ? std::optional(es[i++]) : std::nullopt; },
                  cfg, [&](const auto& r) { out.push_back(r); });
  return out;
}

std::vector<TemporalEdge> window_demo() {
  return {TemporalEdge(0, 1, 1), TemporalEdge(1, 2, 1), TemporalEdge(0, 1, 2), TemporalEdge(2, 3, 2),
          TemporalEdge(1, 3, 3), TemporalEdge(0, 2, 4), TemporalEdge(3, 4, 4), TemporalEdge(1, 2, 5),
          TemporalEdge(0, 4, 5), TemporalEdge(2, 4, 6), TemporalEdge(1, 3, 6), TemporalEdge(0, 1, 7)};
}

template <class W>
StrongWeakLabeling<W> labeling_of(const WindowResult<W>& r, const WeightedGraph<W>& a) {
  StrongWeakLabeling<W> l;
  l.strong = r.strong;
  l.weak = r.weak;
  for (auto& e : l.strong) l.strong_weight += a.weight(e);
  for (auto& e : l.weak) l.weak_weight += a.weight(e);
  return l;
}

// Steps two pipelines in lockstep and checks them against each other and
// against from-scratch rebuilds at every window.
template <class Phi>
void lockstep(const std::vector<TemporalEdge>& es, Timestamp delta, std::size_t oracle_limit,
              std::size_t* checked_windows = nullptr) {
  using W = typename Phi::weight_type;
  StreamConfig dc{delta, 1, StreamMode::dynamic};
  StreamConfig rc{delta, 1, StreamMode::recompute};
  dc.instrument = true;
  StreamingStc<Phi> dyn(dc), rec(rc);
  std::size_t fed = 0, windows = 0;
  const Timestamp t0 = es.front().t, last = std::max(t0, es.back().t - delta + 1);
  for (Timestamp ts = t0; ts <= last; ++ts) {
    while (fed < es.size() && es[fed].t <= ts + delta - 1) {
      dyn.push(es[fed]);
      rec.push(es[fed]);
      ++fed;
    }
    auto a = dyn.advance(ts);
    auto b = rec.advance(ts);
    ++windows;
    const auto& agg = dyn.aggregated().graph();
    ASSERT_EQ(agg, rec.aggregated().graph());
    const auto wd = dyn.wedge_graph();
    ASSERT_EQ(wd, build_wedge_graph(agg)) << "window " << ts;
    ASSERT_EQ(wd, rec.wedge_graph()) << "window " << ts;
    ASSERT_EQ(a.wedge_vertices, b.wedge_vertices);
    ASSERT_EQ(a.wedge_edges, b.wedge_edges);
    ASSERT_EQ(a.n_strong + a.n_weak, agg.edge_count());
    if (a.changed) {
      auto la = labeling_of(a, agg);
      ASSERT_TRUE(is_stc_feasible(agg, la));
      ASSERT_TRUE(is_stc_feasible(agg, labeling_of(b, agg)));
      ASSERT_TRUE(a.cost);
      ASSERT_TRUE(a.cost->within_bound()) << "examined " << a.cost->examined << " bound " << a.cost->bound;
      if (wd.vertex_count() <= oracle_limit) {
        auto opt = stc_exact(agg, ExactObjective::weighted, oracle_limit);
        const double tol = WeightTraits<W>::exact ? 0.0 : 1e-9 * std::max(1.0, double(opt.weak_weight));
        ASSERT_LE(double(a.weak_weight), 2.0 * double(opt.weak_weight) + tol);
        ASSERT_LE(double(b.weak_weight), 2.0 * double(opt.weak_weight) + tol);
      }
    }
  }
  if (checked_windows) *checked_windows = windows;
}

}  // namespace

TEST(StreamStc, WindowDemoDeltaThree) {
  auto rs = run_all(window_demo(), StreamConfig{3});
  ASSERT_EQ(rs.size(), 5u);  // starts 1..5
  EXPECT_EQ(rs.front().window.start, 1);
  EXPECT_EQ(rs.front().window.end(), 3);
  EXPECT_EQ(rs[1].window.start, 2);
  EXPECT_EQ(rs.back().window.start, 5);
  // window [2,4] aggregates the temporal edges with timestamps 2..4
  auto second = window_demo();
  std::vector<TemporalEdge> in;
  for (auto& e : second)
    if (e.t >= 2 && e.t <= 4) in.push_back(e);
  auto a = aggregate<FrequencyWeight>(in);
  EXPECT_EQ(rs[1].n_strong + rs[1].n_weak, a.graph().edge_count());
}

TEST(StreamStc, SingleEdgeAlwaysStrong) {
  std::vector<TemporalEdge> es{TemporalEdge(4, 9, 10)};
  auto rs = run_all(es, StreamConfig{5});
  ASSERT_EQ(rs.size(), 1u);
  EXPECT_EQ(rs[0].strong, std::vector<EdgeKey>{EdgeKey(4, 9)});
  EXPECT_TRUE(rs[0].weak.empty());
}

TEST(StreamStc, EmptyStream) {
  EXPECT_TRUE(run_all({}, StreamConfig{5}).empty());
}

TEST(StreamStc, UnchangedWindowsAreMarked) {
  std::vector<TemporalEdge> es{TemporalEdge(0, 1, 0), TemporalEdge(1, 2, 0), TemporalEdge(0, 1, 10)};
  auto rs = run_all(es, StreamConfig{3});
  ASSERT_EQ(rs.size(), 9u);  // starts 0..8
  EXPECT_TRUE(rs[0].changed);
  EXPECT_EQ(rs[0].n_weak, 2u);  // equal weights: one price makes both ends tight
  EXPECT_TRUE(rs[1].changed);  // [1,3] drops both edges
  EXPECT_EQ(rs[1].n_strong + rs[1].n_weak, 0u);
  EXPECT_FALSE(rs[2].changed);
  EXPECT_EQ(rs[2].examined, 0u);
  EXPECT_TRUE(rs[8].changed);  // [8,10] picks up t=10
  EXPECT_EQ(rs[8].n_strong, 1u);

  StreamConfig quiet{3};
  quiet.emit_unchanged = false;
  auto qs = run_all(es, quiet);
  ASSERT_EQ(qs.size(), 3u);
  EXPECT_EQ(qs[2].window.start, 8);
  for (auto& r : qs) EXPECT_TRUE(r.changed);
}

TEST(StreamStc, StrideMovesWindowFurther) {
  StreamConfig cfg{3, 2};
  auto rs = run_all(window_demo(), cfg);
  ASSERT_EQ(rs.size(), 3u);
  EXPECT_EQ(rs[1].window.start, 3);
  EXPECT_EQ(rs[2].window.start, 5);
}

TEST(StreamStc, StreamShorterThanWindow) {
  auto rs = run_all(window_demo(), StreamConfig{50});
  ASSERT_EQ(rs.size(), 1u);
  EXPECT_EQ(rs[0].window.start, 1);
}

TEST(StreamStc, OutOfOrderInputRejected) {
  std::vector<TemporalEdge> es{TemporalEdge(0, 1, 5), TemporalEdge(1, 2, 3)};
  EXPECT_THROW(run_all(es, StreamConfig{2}), StreamOrderError);
}

TEST(StreamStc, IterationCostExamples) {
  StreamConfig cfg{2};
  cfg.instrument = true;
  StreamingStc<FrequencyWeight> s(cfg);
  s.push(TemporalEdge(0, 1, 0));
  auto first = s.advance(0);
  ASSERT_TRUE(first.cost);
  EXPECT_EQ(first.cost->examined, 0u);  // lone edge: no wedge
  EXPECT_EQ(first.cost->arrived, 1u);
  auto quiet = s.advance(1);  // [1,2]: t=0 leaves
  ASSERT_TRUE(quiet.cost);
  EXPECT_EQ(quiet.cost->expired, 1u);
  auto empty = s.advance(2);
  EXPECT_FALSE(empty.changed);
  EXPECT_EQ(empty.examined, 0u);
}

TEST(StreamStc, EventHookSeesLemmaTwoBounds) {
  auto es = generate_synthetic_stream({.nodes = 30, .edges = 3000, .lifetime = 300, .seed = 4});
  StreamingStc<FrequencyWeight> s(StreamConfig{20});
  std::size_t inserts = 0, deletes = 0;
  s.set_event_hook([&](const AggEvent<std::int64_t>& ev, const WeightedGraph<std::int64_t>& before,
                       std::span<const WedgeRequest<std::int64_t>> reqs) {
    std::size_t ins = 0, del = 0;
    for (const auto& r : reqs) {
      ins += r.kind == WedgeRequest<std::int64_t>::Kind::ins_edge;
      del += r.kind == WedgeRequest<std::int64_t>::Kind::del_edge;
    }
    const std::size_t dv = before.degree(ev.edge.u), dw = before.degree(ev.edge.v);
    if (ev.kind == AggEvent<std::int64_t>::Kind::inserted) {
      ++inserts;
      EXPECT_LE(ins, dv + dw);
      EXPECT_LE(del, std::min(dv, dw));
    } else if (ev.kind == AggEvent<std::int64_t>::Kind::deleted) {
      ++deletes;
      EXPECT_LE(ins, std::min(dv, dw));
      EXPECT_LE(del, dv + dw);
    }
  });
  std::size_t fed = 0;
  for (Timestamp ts = 0; ts < 300; ++ts) {
    while (fed < es.size() && es[fed].t <= ts + 19) s.push(es[fed++]);
    s.advance(ts);
  }
  EXPECT_GT(inserts, 50u);
  EXPECT_GT(deletes, 50u);
}

TEST(StreamStc, CrossModeFrequency) {
  std::mt19937_64 rng(1);
  auto es = oracle::random_stream(rng, 9, 600, 300);
  std::size_t windows = 0;
  lockstep<FrequencyWeight>(es, 12, 20, &windows);
  EXPECT_GT(windows, 250u);
}

TEST(StreamStc, CrossModeDecay) {
  std::mt19937_64 rng(2);
  auto es = oracle::random_stream(rng, 9, 600, 300);
  lockstep<DecayWeight>(es, 15, 20);
}

TEST(StreamStc, CrossModeDuration) {
  std::mt19937_64 rng(3);
  auto es = oracle::random_stream(rng, 9, 600, 300, true);
  lockstep<DurationWeight>(es, 10, 20);
}

TEST(StreamStc, CrossModeSynthetic) {
  auto es = generate_synthetic_stream({.nodes = 60, .edges = 6000, .lifetime = 600, .seed = 9});
  lockstep<FrequencyWeight>(es, 30, 0);
}

TEST(StreamStc, DynamicDoesLessWorkOnOverlappingWindows) {
  auto es = generate_synthetic_stream({.nodes = 80, .edges = 8000, .lifetime = 500, .seed = 5});
  StreamConfig d{100};
  StreamConfig r{100, 1, StreamMode::recompute};
  std::uint64_t wd = 0, wr = 0;
  for (auto& x : run_all(es, d)) wd += x.examined;
  for (auto& x : run_all(es, r)) wr += x.examined;
  EXPECT_LT(wd, wr);
}

TEST(StreamStc, ConfigErrors) {
  EXPECT_THROW(StreamingStc<FrequencyWeight>(StreamConfig{0}), ConfigError);
  EXPECT_THROW(StreamingStc<FrequencyWeight>(StreamConfig{3, 0}), ConfigError);
}
