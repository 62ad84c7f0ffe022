#include <gtest/gtest.h>

#include <random>

#include "drd/errors.hpp"
#include "drd/formulas.hpp"
#include "drd/solvers.hpp"
#include "oracle.hpp"

using namespace drd;

namespace {

long long solver_value(const Graph& g) { return solve_double_roman(g).value; }

void expect_witness(const FormulaResult& f) {
  ASSERT_TRUE(f.witness.has_value()) << f.family;
  EXPECT_TRUE(is_valid_drdf(f.graph, *f.witness).valid()) << f.family << " " << f.witness->to_string();
  EXPECT_EQ(weight(*f.witness), f.value) << f.family;
}

}  // namespace

TEST(Cycle, Values) {
  EXPECT_EQ(gamma_dr_cycle(6).value, 6);
  EXPECT_EQ(gamma_dr_cycle(7).value, 8);
  EXPECT_EQ(gamma_dr_cycle(11).value, 12);
  EXPECT_FALSE(gamma_dr_cycle(6).witness.has_value());
  EXPECT_THROW(gamma_dr_cycle(2), InvalidSpec);
}

TEST(Cycle, AgreesWithSolver) {
  for (int n = 3; n <= 16; ++n) EXPECT_EQ(gamma_dr_cycle(n).value, solver_value(cycle_graph(n))) << n;
  for (int n = 3; n <= 10; ++n)
    EXPECT_EQ(gamma_dr_cycle(n).value, brute_force(cycle_graph(n), Invariant::double_roman).value) << n;
}

TEST(Grid2, ValuesAndWitnesses) {
  auto g1 = gamma_dr_grid2(1);
  EXPECT_EQ(g1.value, 3);
  EXPECT_EQ(*g1.witness, DRLabeling({0, 3}));
  auto g3 = gamma_dr_grid2(3);
  EXPECT_EQ(g3.value, 6);
  EXPECT_EQ(*g3.witness, DRLabeling({0, 0, 3, 3, 0, 0}));
  auto g4 = gamma_dr_grid2(4);
  EXPECT_EQ(g4.value, 8);
  EXPECT_EQ(*g4.witness, DRLabeling({0, 0, 3, 0, 3, 0, 0, 2}));
  EXPECT_THROW(gamma_dr_grid2(2), ExcludedCase);
  EXPECT_THROW(gamma_dr_grid2(0), InvalidSpec);
}

TEST(Grid2, CaseSplitAndSolver) {
  for (int n = 1; n <= 8; ++n) {
    if (n == 2) continue;
    auto f = gamma_dr_grid2(n);
    EXPECT_EQ(f.value, n % 2 ? 3 * (n + 1) / 2 : 3 * n / 2 + 2);
    expect_witness(f);
    EXPECT_EQ(f.value, solver_value(f.graph)) << n;
    if (f.graph.order() <= 10) EXPECT_EQ(f.value, brute_force(f.graph, Invariant::double_roman).value);
  }
}

TEST(CoronaNontrivial, Examples) {
  EXPECT_EQ(gamma_dr_corona_nontrivial(path_graph(3), path_graph(2)).value, 9);
  EXPECT_EQ(gamma_dr_corona_nontrivial(Graph(1), complete_graph(2)).value, 3);
  EXPECT_EQ(gamma_dr_corona_nontrivial(cycle_graph(4), path_graph(3)).value, 12);
  EXPECT_THROW(gamma_dr_corona_nontrivial(path_graph(3), Graph(1)), ExcludedCase);
}

TEST(CoronaNontrivial, RandomAgreesWithSolver) {
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<int> base(1, 4), copy(2, 3);
  for (int trial = 0; trial < 20; ++trial) {
    Graph g = testgen::random_graph(rng, base(rng));
    Graph h = testgen::random_graph(rng, copy(rng));
    auto f = gamma_dr_corona_nontrivial(g, h);
    expect_witness(f);
    ASSERT_LE(f.graph.order(), 16u);
    EXPECT_EQ(f.value, solver_value(f.graph));
  }
}

TEST(CoronaK1, Examples) {
  EXPECT_EQ(gamma_dr_corona_k1(FamilySpec::path(3)).value, 7);
  EXPECT_EQ(gamma_dr_corona_k1(FamilySpec::complete(4)).value, 9);
  EXPECT_EQ(gamma_dr_corona_k1(FamilySpec::complete_bipartite(2, 2)).value, 10);
  EXPECT_EQ(gamma_dr_corona_k1(FamilySpec::cycle(4)).value, 10);
  EXPECT_THROW(gamma_dr_corona_k1(FamilySpec::star(3)), InvalidSpec);
  EXPECT_THROW(gamma_dr_corona_k1(FamilySpec::cycle(2)), InvalidSpec);
}

TEST(CoronaK1, AllFamiliesAgreeWithSolver) {
  std::vector<FamilySpec> specs;
  for (int n = 1; n <= 8; ++n) {
    specs.push_back(FamilySpec::path(n));
    specs.push_back(FamilySpec::complete(n));
    if (n >= 3) specs.push_back(FamilySpec::cycle(n));
  }
  for (int p = 1; p <= 4; ++p)
    for (int q = 1; q <= 4; ++q)
      if (p + q <= 8) specs.push_back(FamilySpec::complete_bipartite(p, q));
  for (const auto& spec : specs) {
    auto f = gamma_dr_corona_k1(spec);
    const auto n = static_cast<long long>(f.graph.order() / 2);
    expect_witness(f);
    EXPECT_GE(f.value, 2 * n + 1) << spec.to_string();
    EXPECT_LE(f.value, 3 * n) << spec.to_string();
    EXPECT_EQ(f.value, solver_value(f.graph)) << spec.to_string();
    if (f.graph.order() <= 10) EXPECT_EQ(f.value, brute_force(f.graph, Invariant::double_roman).value);
  }
}

TEST(DoubleCorona, Examples) {
  auto k1 = gamma_dr_double_corona(Graph(1));
  EXPECT_EQ(k1.value, 5);
  EXPECT_EQ(k1.graph.order(), 4u);
  EXPECT_EQ(k1.graph.size(), 3u);
  EXPECT_EQ(gamma_dr_double_corona(path_graph(2)).value, 10);
  EXPECT_EQ(gamma_dr_double_corona(cycle_graph(3)).value, 15);
  for (int n = 1; n <= 4; ++n) {
    auto f = gamma_dr_double_corona(path_graph(n));
    expect_witness(f);
    EXPECT_EQ(f.value, solver_value(f.graph));
  }
}
