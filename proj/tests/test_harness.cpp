#include <gtest/gtest.h>

#include "bergeham/harness/campaign.hpp"
#include "bergeham/harness/sampling.hpp"

using namespace bergeham;

namespace {

CampaignConfig verify_config(std::size_t n, std::size_t r, std::size_t samples, std::uint64_t seed) {
  CampaignConfig cfg;
  cfg.kind = CampaignKind::verify;
  cfg.n = n;
  cfg.r = r;
  cfg.samples = samples;
  cfg.seed = seed;
  cfg.budget.max_nodes = 2'000'000;
  return cfg;
}

std::size_t total(const CampaignReport& r) {
  return r.count(Outcome::pass) + r.count(Outcome::fail) + r.count(Outcome::unknown) + r.count(Outcome::vacuous);
}

}  // namespace

TEST(Sampling, Extremes) {
  SamplingProfile full;
  full.edge_probability = 1.0;
  const auto h = sample_hypergraph(5, 3, full, 1);
  EXPECT_EQ(h.edge_count(), 10u);
  EXPECT_EQ(h.uniformity(), 3u);
  SamplingProfile none;
  none.edge_probability = 0.0;
  EXPECT_EQ(sample_hypergraph(6, 3, none, 1).edge_count(), 0u);
  EXPECT_EQ(sample_hypergraph(4, std::nullopt, full, 1).edge_count(), 15u);
}

TEST(Sampling, DeterministicInSeed) {
  SamplingProfile p;
  p.edge_probability = 0.3;
  EXPECT_EQ(sample_hypergraph(8, 3, p, 42), sample_hypergraph(8, 3, p, 42));
  EXPECT_FALSE(sample_hypergraph(8, 3, p, 42) == sample_hypergraph(8, 3, p, 43));
}

TEST(Sampling, DenseFloorReachesTarget) {
  SamplingProfile p;
  p.edge_probability = 0.02;
  p.floor_target = [](const DegreeSequence& d) { return posa_r_uniform(d, 3).satisfied(); };
  for (std::uint64_t seed = 0; seed < 20; ++seed)
    EXPECT_TRUE(posa_r_uniform(degree_sequence(sample_hypergraph(9, 3, p, seed)), 3).satisfied());
}

TEST(Sampling, BaseEdgesAreKept) {
  SamplingProfile p;
  p.edge_probability = 0.0;
  p.base_edges = {VertexSet::of({0, 1, 2}), VertexSet::of({2, 3, 4})};
  const auto h = sample_hypergraph(6, 3, p, 5);
  EXPECT_EQ(h.edge_count(), 2u);
}

TEST(Sampling, Errors) {
  SamplingProfile p;
  p.floor_target = [](const DegreeSequence& d) { return d.minimum() > 100; };
  EXPECT_THROW(sample_hypergraph(6, 3, p, 1), InfeasibleError);
  EXPECT_THROW(sample_hypergraph(64, 3, SamplingProfile{}, 1), PreconditionError);
  EXPECT_THROW(sample_hypergraph(23, std::nullopt, SamplingProfile{}, 1), InfeasibleError);
  SamplingProfile bad;
  bad.edge_probability = 1.5;
  EXPECT_THROW(sample_hypergraph(5, 3, bad, 1), PreconditionError);
}

TEST(Seeds, PerTrialSeedsDiffer) {
  std::set<std::uint64_t> seen;
  for (std::uint64_t t = 0; t < 1000; ++t) seen.insert(trial_seed(7, t));
  EXPECT_EQ(seen.size(), 1000u);
  EXPECT_NE(trial_seed(7, 0), trial_seed(8, 0));
}

TEST(VerifyCampaign, NoRefutationsAndCountsSum) {
  const auto report = verify_theorem_campaign(verify_config(7, 3, 60, 3));
  EXPECT_EQ(total(report), 60u);
  EXPECT_EQ(report.count(Outcome::fail), 0u);
  EXPECT_TRUE(report.counterexamples.empty());
  EXPECT_GT(report.count(Outcome::pass), 0u);
}

TEST(VerifyCampaign, UniformFourOnNine) {
  const auto report = verify_theorem_campaign(verify_config(9, 4, 40, 5));
  EXPECT_EQ(report.count(Outcome::fail), 0u);
  EXPECT_EQ(report.count(Outcome::pass), 40u);
}

TEST(VerifyCampaign, ForcedNonUniformSmoke) {
  auto cfg = verify_config(8, 0, 30, 9);
  cfg.theorem = Theorem::non_uniform;
  cfg.force = true;
  const auto report = verify_theorem_campaign(cfg);
  EXPECT_EQ(total(report), 30u);
  EXPECT_EQ(report.count(Outcome::fail), 0u);
  EXPECT_NE(campaign_to_text(report).find("(forced)"), std::string::npos);
}

TEST(VerifyCampaign, RejectsBadConfig) {
  auto cfg = verify_config(6, 3, 10, 1);
  EXPECT_THROW(verify_theorem_campaign(cfg), PreconditionError);
  cfg = verify_config(7, 3, 0, 1);
  EXPECT_THROW(verify_theorem_campaign(cfg), PreconditionError);
  cfg = verify_config(7, 3, 5, 1);
  cfg.p_min = 0.6;
  cfg.p_max = 0.5;
  EXPECT_THROW(verify_theorem_campaign(cfg), PreconditionError);
  cfg = verify_config(10, 0, 5, 1);
  cfg.theorem = Theorem::non_uniform;
  EXPECT_THROW(verify_theorem_campaign(cfg), PreconditionError);
}

TEST(Campaigns, ReportsAreReproducibleAndThreadIndependent) {
  auto cfg = verify_config(9, 3, 40, 11);
  const auto a = campaign_to_text(verify_theorem_campaign(cfg));
  cfg.threads = 4;
  const auto b = campaign_to_text(verify_theorem_campaign(cfg));
  EXPECT_EQ(a, b);
  EXPECT_EQ(campaign_to_json(verify_theorem_campaign(cfg)).dump(), campaign_to_json(verify_theorem_campaign(cfg)).dump());

  CampaignConfig conj;
  conj.kind = CampaignKind::conjecture;
  conj.n = 7;
  conj.r = 3;
  conj.samples = 200;
  conj.seed = 4;
  EXPECT_EQ(campaign_to_text(conjecture_search(conj)), campaign_to_text(conjecture_search(conj)));
}

TEST(SharpnessCampaign, NamedInstances) {
  CampaignConfig cfg;
  cfg.kind = CampaignKind::sharpness;
  cfg.n = 10;
  const auto report = sharpness_campaign(cfg);
  auto find = [&](const std::string& label) {
    for (const auto& t : report.trials)
      if (t.label == label) return t.outcome;
    ADD_FAILURE() << "missing " << label;
    return Outcome::fail;
  };
  EXPECT_EQ(find("h2(n=9,r=3,k=4)"), Outcome::pass);
  EXPECT_EQ(find("h3(n=10,r=3)"), Outcome::pass);
  EXPECT_EQ(find("h1(n=8,r=3,k=2)"), Outcome::pass);
  EXPECT_EQ(report.count(Outcome::pass), report.trials.size());
}

TEST(SharpnessCampaign, FamilyAndKFilter) {
  CampaignConfig cfg;
  cfg.kind = CampaignKind::sharpness;
  cfg.n = 12;
  cfg.families = {Family::h2};
  cfg.k = 4;
  const auto report = sharpness_campaign(cfg);
  ASSERT_FALSE(report.trials.empty());
  for (const auto& t : report.trials) EXPECT_NE(t.label.find("h2("), std::string::npos);
  for (const auto& t : report.trials) EXPECT_NE(t.label.find("k=4"), std::string::npos);
}

TEST(ConjectureSearch, CompleteHypergraphsAreOutOfScope) {
  CampaignConfig cfg;
  cfg.kind = CampaignKind::conjecture;
  cfg.n = 7;
  cfg.r = 3;
  cfg.samples = 10;
  cfg.p_min = cfg.p_max = 1.0;
  const auto report = conjecture_search(cfg);
  // Odd trials perturb a construction and may land in scope; the Bernoulli ones cannot.
  for (const auto& t : report.trials)
    if (t.label == "bernoulli") {
      EXPECT_EQ(t.outcome, Outcome::vacuous);
    }
  EXPECT_TRUE(report.counterexamples.empty());
}

TEST(ConjectureSearch, NoCounterexamplesAtSevenThree) {
  CampaignConfig cfg;
  cfg.kind = CampaignKind::conjecture;
  cfg.n = 7;
  cfg.r = 3;
  cfg.samples = 10000;
  const auto report = conjecture_search(cfg);
  EXPECT_EQ(total(report), 10000u);
  EXPECT_TRUE(report.counterexamples.empty());
  EXPECT_GT(report.count(Outcome::pass), 0u);
}

TEST(Counterexample, ReverifiesFromSerializedForm) {
  const auto c = example2(9, 3, 4);
  Counterexample ce{0, Theorem::r_uniform, 3, false, c.hypergraph, posa_r_uniform(degree_sequence(c.hypergraph), 3),
                    true, SearchBudget{}, "test"};
  const auto j = nlohmann::json::parse(counterexample_to_json(ce).dump());
  EXPECT_TRUE(reverify_counterexample(j));

  auto flipped = j;
  flipped["none_exists_proof"] = false;
  EXPECT_FALSE(reverify_counterexample(flipped));

  auto edited = j;
  edited["report"]["satisfied"] = true;
  EXPECT_FALSE(reverify_counterexample(edited));

  // Adding every missing triple through the low side makes the host Hamiltonian.
  auto host = j;
  std::vector<VertexSet> edges(c.hypergraph.edges().begin(), c.hypergraph.edges().end());
  for_each_subset(VertexSet::interval(0, 9), 3, [&](VertexSet e) {
    if (!c.hypergraph.find_edge(e)) edges.push_back(e);
  });
  host["host"] = hypergraph_to_json(Hypergraph(9, edges));
  EXPECT_FALSE(reverify_counterexample(host));
}
