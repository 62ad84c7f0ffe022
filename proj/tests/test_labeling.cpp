#include <gtest/gtest.h>

#include <vector>

#include "drd/enumerate.hpp"
#include "drd/errors.hpp"
#include "drd/graph.hpp"
#include "drd/labeling.hpp"
#include "oracle.hpp"

using namespace drd;

TEST(DrdfValidity, Examples) {
  EXPECT_TRUE(is_valid_drdf(Graph(1), {2}).valid());
  EXPECT_TRUE(is_valid_drdf(path_graph(3), {0, 3, 0}).valid());

  Verdict v = is_valid_drdf(path_graph(3), {0, 2, 0});
  ASSERT_FALSE(v.valid());
  std::vector<Violation> want{{0, Condition::zero_undefended}, {2, Condition::zero_undefended}};
  EXPECT_EQ(v.violations, want);
  EXPECT_EQ(condition_tag(v.violations[0].condition), "(i)");
}

TEST(DrdfValidity, OneNeedsAHeavyNeighbor) {
  Verdict v = is_valid_drdf(path_graph(2), {1, 1});
  std::vector<Violation> want{{0, Condition::one_undefended}, {1, Condition::one_undefended}};
  EXPECT_EQ(v.violations, want);
  EXPECT_EQ(condition_tag(Condition::one_undefended), "(ii)");
  EXPECT_TRUE(is_valid_drdf(path_graph(2), {1, 2}).valid());
  EXPECT_TRUE(is_valid_drdf(path_graph(3), {2, 0, 2}).valid());
}

TEST(DrdfValidity, IsolatedVerticesNeedTwoOrMore) {
  EXPECT_FALSE(is_valid_drdf(Graph(1), {1}).valid());
  EXPECT_FALSE(is_valid_drdf(Graph(1), {0}).valid());
  EXPECT_TRUE(is_valid_drdf(Graph(2), {2, 3}).valid());
}

TEST(DrdfValidity, LengthMismatch) {
  EXPECT_THROW(is_valid_drdf(path_graph(3), {0, 3}), InvalidArgument);
  EXPECT_THROW(is_valid_rdf(path_graph(3), {0, 2}), InvalidArgument);
}

TEST(RdfValidity, Examples) {
  EXPECT_TRUE(is_valid_rdf(path_graph(3), {0, 2, 0}).valid());
  Verdict v = is_valid_rdf(path_graph(3), {1, 0, 1});
  std::vector<Violation> want{{1, Condition::zero_undefended}};
  EXPECT_EQ(v.violations, want);
  EXPECT_TRUE(is_valid_rdf(Graph(1), {1}).valid());
}

TEST(Dominating, Examples) {
  EXPECT_TRUE(is_dominating(path_graph(3), {1}));
  EXPECT_FALSE(is_dominating(path_graph(3), {0}));
  EXPECT_TRUE(is_dominating(cycle_graph(6), {0, 3}));
  EXPECT_THROW(is_dominating(path_graph(3), {3}), InvalidArgument);
}

TEST(Weight, Examples) {
  EXPECT_EQ(weight(DRLabeling{0, 3, 0}), 3);
  EXPECT_EQ(weight(RomanLabeling{2, 2, 2}), 6);
}

TEST(LabelingValues, RangeAndText) {
  EXPECT_THROW(DRLabeling({0, 4}), InvalidArgument);
  EXPECT_THROW(RomanLabeling({3}), InvalidArgument);
  EXPECT_EQ(DRLabeling({0, 3, 0}).to_string(), "0,3,0");
  EXPECT_EQ(DRLabeling::parse("0,3,0"), DRLabeling({0, 3, 0}));
  EXPECT_EQ(DRLabeling::parse(" 1, 2 ,3 "), DRLabeling({1, 2, 3}));
  EXPECT_THROW(DRLabeling::parse("0,4"), ParseError);
  EXPECT_THROW(DRLabeling::parse("0,,1"), ParseError);
  EXPECT_THROW(RomanLabeling::parse("3"), ParseError);
  EXPECT_TRUE(DRLabeling::parse("").empty());
  EXPECT_EQ(VertexSet({3, 0, 3}).to_string(), "{0,3}");
  EXPECT_TRUE(VertexSet({}).empty());
}

TEST(EliminateOnes, Examples) {
  EXPECT_EQ(eliminate_ones(path_graph(2), {1, 2}), DRLabeling({0, 3}));
  EXPECT_EQ(eliminate_ones(path_graph(2), {1, 3}), DRLabeling({0, 3}));
  EXPECT_EQ(eliminate_ones(path_graph(4), {1, 2, 2, 1}), DRLabeling({0, 3, 3, 0}));
  EXPECT_THROW(eliminate_ones(path_graph(2), {1, 1}), InvalidArgument);
}

TEST(Partition, Examples) {
  auto p = partition({0, 3, 0});
  EXPECT_EQ(p[0], VertexSet({0, 2}));
  EXPECT_TRUE(p[1].empty());
  EXPECT_TRUE(p[2].empty());
  EXPECT_EQ(p[3], VertexSet({1}));
  p = partition({2, 2});
  EXPECT_EQ(p[2], VertexSet({0, 1}));
  p = partition({1, 0, 2, 3});
  EXPECT_EQ(p[0], VertexSet({1}));
  EXPECT_EQ(p[1], VertexSet({0}));
  EXPECT_EQ(p[2], VertexSet({2}));
  EXPECT_EQ(p[3], VertexSet({3}));
}

TEST(Restrict, Examples) {
  const DRLabeling f{0, 3, 0};
  EXPECT_EQ(restrict(f, {0, 1}), DRLabeling({0, 3}));
  EXPECT_EQ(restrict(f, {0, 1, 2}), f);
  EXPECT_TRUE(restrict(f, VertexSet{}).empty());
  // reindex is indexed by old vertex; entries outside C are ignored.
  const std::vector<Vertex> reindex{1, 0, 7};
  EXPECT_EQ(restrict(f, {0, 1}, reindex), DRLabeling({3, 0}));
  EXPECT_THROW(restrict(f, {3}), InvalidArgument);
  const std::vector<Vertex> bad{0, 0, 0};
  EXPECT_THROW(restrict(f, {0, 1}, bad), InvalidArgument);
}

namespace {

// Calls fn on every labeling in {0..max}^n.
template <class Fn>
void for_each_labeling(std::size_t n, int max, Fn fn) {
  std::vector<std::uint8_t> v(n, 0);
  while (true) {
    fn(DRLabeling(v));
    std::size_t i = 0;
    while (i < n && v[i] == max) v[i++] = 0;
    if (i == n) return;
    ++v[i];
  }
}

std::vector<int> as_ints(const DRLabeling& f) { return {f.values().begin(), f.values().end()}; }

}  // namespace

// Every valid DRDF of every labeled graph with n <= 4 (and a sample at n = 5
// to keep the run short; the acceptance binary covers n = 5 exhaustively).
TEST(Properties, ValidatorAgreesWithOracleAndEliminationIsSound) {
  std::uint64_t checked = 0;
  for (int n = 1; n <= 5; ++n) {
    auto stream = enumerate_labeled_graphs(n);
    std::uint64_t index = 0;
    while (auto g = stream.next()) {
      if (n == 5 && index++ % 37 != 0) continue;
      for_each_labeling(n, 3, [&](const DRLabeling& f) {
        const bool valid = is_valid_drdf(*g, f).valid();
        ASSERT_EQ(valid, oracle::drdf(*g, as_ints(f)));
        if (!valid) return;
        const DRLabeling e = eliminate_ones(*g, f);
        EXPECT_TRUE(partition(e)[1].empty());
        EXPECT_LE(weight(e), weight(f));
        EXPECT_TRUE(is_valid_drdf(*g, e).valid());
        auto parts = partition(f);
        std::vector<Vertex> heavy(parts[2].begin(), parts[2].end());
        heavy.insert(heavy.end(), parts[3].begin(), parts[3].end());
        EXPECT_TRUE(is_dominating(*g, VertexSet(heavy)));
        ++checked;
      });
    }
  }
  EXPECT_GT(checked, 0u);
}

TEST(Properties, PartitionCoversEveryVertexOnce) {
  for_each_labeling(5, 3, [](const DRLabeling& f) {
    auto p = partition(f);
    std::size_t total = 0;
    for (int i = 0; i < 4; ++i) {
      total += p[i].size();
      for (Vertex v : p[i]) EXPECT_EQ(f[v], i);
    }
    EXPECT_EQ(total, f.size());
  });
}

TEST(Properties, AllThreesValidAllZerosInvalid) {
  for (int n = 1; n <= 5; ++n) {
    auto stream = enumerate_labeled_graphs(n);
    while (auto g = stream.next()) {
      EXPECT_TRUE(is_valid_drdf(*g, DRLabeling::constant(n, 3)).valid());
      EXPECT_FALSE(is_valid_drdf(*g, DRLabeling::constant(n, 0)).valid());
    }
  }
}
