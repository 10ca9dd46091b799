#include <gtest/gtest.h>

#include "bergeham/conditions/conditions.hpp"
#include "bergeham/constructions/constructions.hpp"
#include "bergeham/solver/exact_search.hpp"
#include "support/oracles.hpp"

using namespace bergeham;

namespace {

oracle::EdgeList sorted(oracle::EdgeList l) {
  std::sort(l.begin(), l.end());
  return l;
}

oracle::EdgeList reference_edges(const FamilyParameters& p) {
  switch (p.family) {
    case Family::h1: return oracle::h1_edges(p.n, p.r, *p.k);
    case Family::h2: return oracle::h2_edges(p.n, p.r, *p.k);
    case Family::h3: return oracle::h3_edges(p.n, p.r);
  }
  return {};
}

std::vector<FamilyParameters> all_points(std::size_t max_n) {
  std::vector<FamilyParameters> out;
  for (auto f : {Family::h1, Family::h2, Family::h3})
    for (const auto& p : parameter_grid(f, max_n)) out.push_back(p);
  return out;
}

}  // namespace

TEST(Example1, EightThreeTwo) {
  const auto c = example1(8, 3, 2);
  EXPECT_EQ(c.hypergraph.edge_count(), 22u);
  const auto d = degree_sequence(c.hypergraph);
  EXPECT_EQ(d.d(1), 2u);
  EXPECT_EQ(d.d(2), 2u);
  EXPECT_EQ(c.hypergraph.uniformity(), 3u);
  EXPECT_FALSE(is_hamiltonian_bruteforce(c.hypergraph));
  EXPECT_EQ(find_hamiltonian_berge_cycle(c.hypergraph).status, SearchStatus::none_exists);
}

TEST(Example1, SingleLowVertex) {
  const auto c = example1(7, 3, 1);
  EXPECT_EQ(degree(c.hypergraph, 0), 1u);
  EXPECT_FALSE(is_hamiltonian_bruteforce(c.hypergraph));
}

TEST(Example2, NineThreeFour) {
  const auto c = example2(9, 3, 4);
  EXPECT_EQ(degree_sequence(c.hypergraph), DegreeSequence::given({6, 6, 6, 6, 6, 18, 18, 18, 18}));
  EXPECT_EQ(predicted_degree_sequence(c.spec), DegreeSequence::given({6, 6, 6, 6, 6, 18, 18, 18, 18}));
  EXPECT_EQ(find_hamiltonian_berge_cycle(c.hypergraph).status, SearchStatus::none_exists);
}

TEST(Example2, LongestCycleThroughLowSideIsShort) {
  const auto c = example2(7, 3, 3);
  EXPECT_LE(oracle::longest_cycle_through(7, oracle::edge_lists(c.hypergraph), {0, 1, 2}), 6u);
  EXPECT_FALSE(is_hamiltonian_bruteforce(c.hypergraph));
}

TEST(Example3, TenThree) {
  const auto c = example3(10, 3);
  const auto expect = DegreeSequence::given({6, 6, 6, 7, 7, 7, 21, 21, 21, 21});
  EXPECT_EQ(degree_sequence(c.hypergraph), expect);
  EXPECT_EQ(predicted_degree_sequence(c.spec), expect);
  EXPECT_EQ(posa_r_uniform(expect, 3).violated_tags(), std::set<ConditionTag>{ConditionTag::uniform_even});
  EXPECT_EQ(find_hamiltonian_berge_cycle(c.hypergraph).status, SearchStatus::none_exists);
}

TEST(Example1, PredictedLowSide) {
  const auto d = predicted_degree_sequence(example1(8, 3, 2).spec);
  EXPECT_EQ(d.d(1), 2u);
  EXPECT_EQ(d.d(2), 2u);
}

TEST(Constructions, ParameterErrors) {
  EXPECT_THROW(example1(6, 3, 2), PreconditionError);  // n > 2r fails
  EXPECT_THROW(example1(8, 3, 3), PreconditionError);  // k < r fails
  EXPECT_THROW(example1(8, 3, 0), PreconditionError);
  EXPECT_THROW(example2(9, 2, 4), PreconditionError);
  EXPECT_THROW(example2(8, 3, 4), PreconditionError);  // k < n/2 fails
  EXPECT_THROW(example2(9, 4, 3), PreconditionError);  // r <= k fails
  EXPECT_THROW(example3(9, 3), PreconditionError);
  EXPECT_THROW(example3(10, 5), PreconditionError);
  EXPECT_THROW(generate(Family::h1, 9, 3), PreconditionError);
}

TEST(Constructions, EdgesMatchSetBuilderDefinitions) {
  for (const auto& p : all_points(11)) {
    const auto c = generate(p.family, p.n, p.r, p.k);
    EXPECT_EQ(sorted(oracle::edge_lists(c.hypergraph)), sorted(reference_edges(p)))
        << family_name(p.family) << " n=" << p.n << " r=" << p.r;
  }
}

TEST(Constructions, PredictionMatchesBruteCount) {
  for (const auto& p : all_points(12)) {
    const auto c = generate(p.family, p.n, p.r, p.k);
    const auto predicted = predicted_degree_sequence(c.spec);
    const auto counted = oracle::degrees(p.n, oracle::edge_lists(c.hypergraph));
    EXPECT_TRUE(std::equal(predicted.values().begin(), predicted.values().end(), counted.begin(), counted.end()))
        << family_name(p.family) << " n=" << p.n << " r=" << p.r;
    if (p.family == Family::h1) {
      for (std::size_t i = 1; i <= *p.k; ++i) EXPECT_EQ(predicted.d(i), *p.k);
      for (std::size_t i = *p.k + 1; i <= p.n; ++i) EXPECT_GE(predicted.d(i), oracle::choose(p.n - *p.k - 1, p.r - 1));
    }
  }
}

TEST(Constructions, EachFamilyBreaksOnlyItsCondition) {
  for (const auto& p : all_points(12)) {
    const auto c = generate(p.family, p.n, p.r, p.k);
    EXPECT_EQ(posa_r_uniform(degree_sequence(c.hypergraph), p.r).violated_tags(),
              std::set<ConditionTag>{designated_condition(p.family)})
        << family_name(p.family) << " n=" << p.n << " r=" << p.r << " k=" << p.k.value_or(0);
  }
}

TEST(Constructions, SmallInstancesAreNotHamiltonianByBruteForce) {
  for (const auto& p : all_points(8)) {
    const auto c = generate(p.family, p.n, p.r, p.k);
    EXPECT_FALSE(is_hamiltonian_bruteforce(c.hypergraph)) << family_name(p.family) << " n=" << p.n;
    EXPECT_FALSE(oracle::hamiltonian_incidence_dfs(p.n, oracle::edge_lists(c.hypergraph)));
  }
}

TEST(Constructions, GridCoversFamilies) {
  EXPECT_FALSE(parameter_grid(Family::h1, 12).empty());
  EXPECT_FALSE(parameter_grid(Family::h2, 12).empty());
  EXPECT_EQ(parameter_grid(Family::h3, 12).size(), 6u);  // (8,3), (10,3), (10,4), (12,3), (12,4), (12,5)
}
