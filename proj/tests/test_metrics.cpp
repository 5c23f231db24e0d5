#include <gtest/gtest.h>

#include "tgstc/metrics.hpp"

using namespace tgstc;

namespace {

using G = WeightedGraph<std::int64_t>;
using L = StrongWeakLabeling<std::int64_t>;
constexpr NodeId A = 0, B = 1, C = 2, D = 3;

G figure_one() {
  G g;
  g.insert_edge(EdgeKey(A, B), 10);
  g.insert_edge(EdgeKey(B, C), 1);
  g.insert_edge(EdgeKey(B, D), 1);
  g.insert_edge(EdgeKey(C, D), 2);
  return g;
}

L weighted_opt() {
  L l;
  l.strong = {EdgeKey(A, B), EdgeKey(C, D)};
  l.weak = {EdgeKey(B, C), EdgeKey(B, D)};
  return l;
}

L unweighted_opt() {
  L l;
  l.strong = {EdgeKey(B, C), EdgeKey(B, D), EdgeKey(C, D)};
  l.weak = {EdgeKey(A, B)};
  return l;
}

}  // namespace

TEST(StrongStats, WeightedOptimum) {
  auto s = strong_stats(figure_one(), weighted_opt());
  EXPECT_EQ(s.pct_strong, 50.0);
  EXPECT_EQ(s.mean_strong_weight, 6.0);
  EXPECT_EQ(s.mean_weak_weight, 1.0);
}

TEST(StrongStats, UnweightedOptimum) {
  auto s = strong_stats(figure_one(), unweighted_opt());
  EXPECT_EQ(s.pct_strong, 75.0);
  EXPECT_DOUBLE_EQ(s.mean_strong_weight, 4.0 / 3.0);
  EXPECT_EQ(s.mean_weak_weight, 10.0);
}

TEST(StrongStats, AllStrongFlagsEmptyWeak) {
  L l;
  l.strong = figure_one().edge_keys();
  auto s = strong_stats(figure_one(), l);
  EXPECT_EQ(s.pct_strong, 100.0);
  EXPECT_TRUE(s.weak_empty);
  EXPECT_FALSE(s.strong_empty);
  EXPECT_EQ(s.mean_weak_weight, 0.0);
}

TEST(PrecisionRecall, WeightedOptimumTopTwo) {
  auto pr = precision_recall_topk(figure_one(), weighted_opt(), 2);
  EXPECT_EQ(top_k_edges(figure_one(), 2), (std::vector<EdgeKey>{EdgeKey(A, B), EdgeKey(C, D)}));
  EXPECT_EQ(pr.precision, 1.0);
  EXPECT_EQ(pr.recall, 1.0);
}

TEST(PrecisionRecall, UnweightedOptimumTopTwo) {
  auto pr = precision_recall_topk(figure_one(), unweighted_opt(), 2);
  EXPECT_EQ(pr.hits, 1u);
  EXPECT_DOUBLE_EQ(pr.precision, 1.0 / 3.0);
  EXPECT_EQ(pr.recall, 0.5);
}

TEST(PrecisionRecall, EmptyStrongSet) {
  L l;
  l.weak = figure_one().edge_keys();
  auto pr = precision_recall_topk(figure_one(), l, 2);
  EXPECT_EQ(pr.precision, 0.0);
  EXPECT_EQ(pr.recall, 0.0);
}

TEST(PrecisionRecall, OversizedAndZeroK) {
  auto pr = precision_recall_topk(figure_one(), weighted_opt(), 10);
  EXPECT_TRUE(pr.truncated);
  EXPECT_EQ(pr.h_size, 4u);
  EXPECT_EQ(pr.recall, 0.5);
  EXPECT_THROW(precision_recall_topk(figure_one(), weighted_opt(), 0), ConfigError);
}

TEST(PrecisionRecall, TiesBrokenByKey) {
  // BC and BD both weigh 1; the smaller key ranks first
  EXPECT_EQ(top_k_edges(figure_one(), 3).back(), EdgeKey(B, C));
}

TEST(PrecisionRecall, RankByDegree) {
  // degree sums: AB 1+3, BC 3+2, BD 3+2, CD 2+2
  auto h = top_k_edges(figure_one(), 2, RankBy::degree);
  EXPECT_EQ(h, (std::vector<EdgeKey>{EdgeKey(B, C), EdgeKey(B, D)}));
  auto pr = precision_recall_topk(figure_one(), unweighted_opt(), 2, RankBy::degree);
  EXPECT_EQ(pr.recall, 1.0);
}

TEST(PrecisionRecall, HitsConsistent) {
  auto pr = precision_recall_topk(figure_one(), unweighted_opt(), 3);
  EXPECT_DOUBLE_EQ(pr.precision * pr.s_size, static_cast<double>(pr.hits));
  EXPECT_DOUBLE_EQ(pr.recall * pr.h_size, static_cast<double>(pr.hits));
}
