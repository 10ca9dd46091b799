#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "bergeham/conditions/conditions.hpp"
#include "bergeham/conditions/format.hpp"
#include "bergeham/constructions/constructions.hpp"
#include "bergeham/core/io.hpp"
#include "bergeham/harness/sampling.hpp"
#include "bergeham/solver/exact_search.hpp"
#include "bergeham/solver/heuristic.hpp"

namespace bergeham {

enum class CampaignKind { verify, sharpness, conjecture };

inline const char* campaign_name(CampaignKind k) {
  switch (k) {
    case CampaignKind::verify: return "verify";
    case CampaignKind::sharpness: return "sharpness";
    case CampaignKind::conjecture: return "conjecture";
  }
  return "?";
}

struct CampaignConfig {
  CampaignKind kind = CampaignKind::verify;
  // verify: r_uniform or non_uniform (the latter samples non-uniform hypergraphs).
  Theorem theorem = Theorem::r_uniform;
  std::size_t n = 7;  // sharpness: largest n of the parameter grid
  std::size_t r = 3;
  std::optional<std::size_t> k;  // sharpness: restrict h1/h2 to this k
  std::vector<Family> families{Family::h1, Family::h2, Family::h3};
  std::size_t samples = 100;
  double p_min = 0.05;  // per-trial edge probability is drawn from [p_min, p_max]
  double p_max = 0.5;
  std::uint64_t seed = 1;
  SearchBudget budget{};
  bool force = false;
  unsigned threads = 1;
};

enum class Outcome { pass, fail, unknown, vacuous };

inline const char* outcome_name(Outcome o) {
  switch (o) {
    case Outcome::pass: return "pass";
    case Outcome::fail: return "fail";
    case Outcome::unknown: return "unknown";
    case Outcome::vacuous: return "vacuous";
  }
  return "?";
}

// A hypergraph that meets a sufficient condition (or the conjecture's
// hypothesis) but on which the exhaustive search found no Hamiltonian cycle.
struct Counterexample {
  std::size_t trial = 0;
  Theorem theorem = Theorem::r_uniform;
  std::size_t r = 0;
  bool forced = false;
  Hypergraph hypergraph;
  ConditionReport report;
  bool none_exists_proof = false;
  SearchBudget budget{};
  std::string suspect;
};

struct TrialRecord {
  std::size_t index = 0;
  std::string label;
  std::size_t n = 0;
  std::size_t m = 0;
  std::vector<std::uint64_t> degrees;
  Outcome outcome = Outcome::vacuous;
  std::string note;
};

struct CampaignReport {
  CampaignConfig config;
  std::vector<TrialRecord> trials;
  std::vector<Counterexample> counterexamples;

  std::size_t count(Outcome o) const {
    return static_cast<std::size_t>(std::count_if(trials.begin(), trials.end(), [&](const auto& t) { return t.outcome == o; }));
  }
};

namespace detail {

// Heuristic first, then the exact search.
inline SearchResult decide(const Hypergraph& h, const SearchBudget& budget) {
  SearchBudget quick = budget;
  quick.max_nodes = std::min<std::uint64_t>(budget.max_nodes, 20'000);
  quick.threads = 1;
  auto fast = extend_and_close(h, quick);
  if (fast.status == SearchStatus::cycle) return fast;
  SearchBudget exact = budget;
  exact.threads = 1;
  return find_hamiltonian_berge_cycle(h, exact);
}

template <class Fn>
void for_each_index(std::size_t count, unsigned threads, Fn&& fn) {
  if (threads <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  for (unsigned t = 0; t < std::min<std::size_t>(threads, count); ++t)
    pool.emplace_back([&] {
      for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
    });
}

inline std::vector<std::uint64_t> degrees_of(const Hypergraph& h) {
  const auto seq = degree_sequence(h);
  return {seq.values().begin(), seq.values().end()};
}

inline double trial_probability(const CampaignConfig& cfg, std::mt19937_64& rng) {
  return cfg.p_min + (cfg.p_max - cfg.p_min) * unit_interval(rng);
}

inline void validate(const CampaignConfig& cfg) {
  if (cfg.kind != CampaignKind::sharpness && cfg.samples == 0) throw PreconditionError("sample count must be positive");
  if (!(0.0 <= cfg.p_min && cfg.p_min <= cfg.p_max && cfg.p_max <= 1.0))
    throw PreconditionError("edge probabilities need 0 <= p_min <= p_max <= 1");
  cfg.budget.validate();
  if (cfg.kind == CampaignKind::verify) {
    if (cfg.theorem == Theorem::r_uniform) {
      if (cfg.r < 3 || cfg.n <= 2 * cfg.r) throw PreconditionError("r-uniform verification needs r >= 3 and n > 2r");
    } else if (cfg.theorem == Theorem::non_uniform) {
      if (cfg.n <= 40 && !cfg.force) throw PreconditionError("non-uniform verification needs n > 40 or force");
    } else {
      throw PreconditionError("verify campaigns cover the r-uniform and non-uniform theorems");
    }
  }
  if (cfg.kind == CampaignKind::conjecture && (cfg.r < 3 || cfg.n <= 2 * cfg.r))
    throw PreconditionError("conjecture search needs r >= 3 and n > 2r");
}

inline std::string suspect_for_refutation(const Hypergraph& h) {
  if (h.vertex_count() <= 8)
    return is_hamiltonian_bruteforce(h) ? "solver (brute-force oracle finds a cycle)"
                                        : "checker (brute-force oracle agrees there is no cycle)";
  return "checker or solver (too large for the brute-force oracle); generator is ruled out since the sample is "
         "re-checked from its own edges";
}

}  // namespace detail

// Samples hypergraphs pushed over the theorem's degree floor and checks that
// every one the checker accepts is Hamiltonian. A sample the checker accepts
// with a proven absence of cycles is recorded as a counterexample.
inline CampaignReport verify_theorem_campaign(const CampaignConfig& cfg) {
  detail::validate(cfg);
  CampaignReport report{cfg, std::vector<TrialRecord>(cfg.samples), {}};
  std::vector<std::optional<Counterexample>> found(cfg.samples);
  const bool uniform = cfg.theorem == Theorem::r_uniform;
  auto accepts = [&](const DegreeSequence& d) {
    return check_sequence(cfg.theorem, d, cfg.r, cfg.force).satisfied();
  };

  detail::for_each_index(cfg.samples, cfg.threads, [&](std::size_t i) {
    std::mt19937_64 rng(trial_seed(cfg.seed, i));
    SamplingProfile profile;
    profile.edge_probability = detail::trial_probability(cfg, rng);
    profile.floor_target = accepts;
    TrialRecord& t = report.trials[i];
    t.index = i;
    t.n = cfg.n;
    Hypergraph h;
    try {
      h = sample_hypergraph(cfg.n, uniform ? std::optional<std::size_t>(cfg.r) : std::nullopt, profile, rng());
    } catch (const InfeasibleError& e) {
      t.outcome = Outcome::vacuous;
      t.note = e.what();
      return;
    }
    t.m = h.edge_count();
    t.degrees = detail::degrees_of(h);
    const auto checked = check_sequence(cfg.theorem, degree_sequence(h), cfg.r, cfg.force);
    if (!checked.satisfied()) {
      t.outcome = Outcome::vacuous;
      return;
    }
    SearchBudget budget = cfg.budget;
    budget.seed = trial_seed(cfg.seed ^ 0x5eed, i);
    const auto result = detail::decide(h, budget);
    switch (result.status) {
      case SearchStatus::cycle:
        t.outcome = verify_berge_cycle(h, *result.cycle) ? Outcome::pass : Outcome::fail;
        if (t.outcome == Outcome::fail) t.note = "solver returned an invalid certificate";
        break;
      case SearchStatus::unknown:
        t.outcome = Outcome::unknown;
        break;
      case SearchStatus::none_exists:
        t.outcome = Outcome::fail;
        found[i] = Counterexample{i, cfg.theorem, cfg.r, cfg.force, h, checked, true, budget,
                                  detail::suspect_for_refutation(h)};
        t.note = "refutation: " + found[i]->suspect;
        break;
    }
  });
  for (auto& c : found)
    if (c) report.counterexamples.push_back(std::move(*c));
  return report;
}

// For each parameter point: the degree sequence matches the closed form, the
// r-uniform checker flags exactly the designated condition, and the exact
// search proves there is no Hamiltonian Berge cycle.
inline CampaignReport sharpness_campaign(const CampaignConfig& cfg) {
  detail::validate(cfg);
  std::vector<FamilyParameters> grid;
  for (auto f : cfg.families)
    for (const auto& p : parameter_grid(f, cfg.n))
      if (!cfg.k || !p.k || p.k == cfg.k) grid.push_back(p);

  CampaignReport report{cfg, std::vector<TrialRecord>(grid.size()), {}};
  detail::for_each_index(grid.size(), cfg.threads, [&](std::size_t i) {
    const auto& p = grid[i];
    TrialRecord& t = report.trials[i];
    t.index = i;
    t.n = p.n;
    t.label = std::string(family_name(p.family)) + "(n=" + std::to_string(p.n) + ",r=" + std::to_string(p.r) +
              (p.k ? ",k=" + std::to_string(*p.k) : std::string()) + ")";
    const auto c = generate(p.family, p.n, p.r, p.k);
    t.m = c.hypergraph.edge_count();
    t.degrees = detail::degrees_of(c.hypergraph);
    const auto actual = degree_sequence(c.hypergraph);

    std::vector<std::string> problems;
    const auto predicted = predicted_degree_sequence(c.spec);
    if (p.family == Family::h1) {
      const std::size_t k = *p.k;
      const auto floor = binomial(p.n - k - 1, p.r - 1);
      bool ok = actual == predicted;
      for (std::size_t i1 = 1; i1 <= p.n; ++i1) {
        if (i1 <= k && actual.d(i1) != k) ok = false;
        if (i1 > k && BigInt(actual.d(i1)) < floor) ok = false;
      }
      if (!ok) problems.push_back("generator: degree sequence differs from prediction");
    } else if (!(actual == predicted)) {
      problems.push_back("generator: degree sequence differs from prediction");
    }

    const auto checked = posa_r_uniform(actual, p.r);
    const auto tags = checked.violated_tags();
    if (tags != std::set<ConditionTag>{designated_condition(p.family)}) {
      std::string got;
      for (auto tag : tags) got += std::string(got.empty() ? "" : ",") + tag_label(tag);
      problems.push_back(std::string("checker: expected only condition ") + tag_label(designated_condition(p.family)) +
                         ", got {" + got + "}");
    }

    SearchBudget budget = cfg.budget;
    budget.threads = 1;
    const auto result = find_hamiltonian_berge_cycle(c.hypergraph, budget);
    bool unknown = false;
    if (result.status == SearchStatus::cycle)
      problems.push_back(verify_berge_cycle(c.hypergraph, *result.cycle)
                             ? "generator: construction is Hamiltonian"
                             : "solver: invalid certificate");
    else if (result.status == SearchStatus::unknown)
      unknown = true;

    if (!problems.empty()) {
      t.outcome = Outcome::fail;
      for (const auto& s : problems) t.note += (t.note.empty() ? "" : "; ") + s;
    } else {
      t.outcome = unknown ? Outcome::unknown : Outcome::pass;
    }
  });
  return report;
}

// Looks for hypergraphs that satisfy the conjectured condition but not the
// proven r-uniform one, and tries to prove them non-Hamiltonian. Even trials
// push a Bernoulli sample over the conjecture's floor; odd trials start from a
// sharpness construction for (n, r) and perturb it the same way.
inline CampaignReport conjecture_search(const CampaignConfig& cfg) {
  detail::validate(cfg);
  CampaignReport report{cfg, std::vector<TrialRecord>(cfg.samples), {}};
  std::vector<std::optional<Counterexample>> found(cfg.samples);

  std::vector<FamilyParameters> seeds;
  for (auto f : {Family::h1, Family::h2, Family::h3})
    for (const auto& p : parameter_grid(f, cfg.n, cfg.n))
      if (p.r == cfg.r) seeds.push_back(p);

  auto conjecture_holds = [&](const DegreeSequence& d) { return conjecture_r_uniform(d, cfg.r).satisfied(); };

  detail::for_each_index(cfg.samples, cfg.threads, [&](std::size_t i) {
    std::mt19937_64 rng(trial_seed(cfg.seed, i));
    SamplingProfile profile;
    profile.floor_target = conjecture_holds;
    TrialRecord& t = report.trials[i];
    t.index = i;
    t.n = cfg.n;
    if (i % 2 == 1 && !seeds.empty()) {
      const auto& p = seeds[rng() % seeds.size()];
      const auto c = generate(p.family, p.n, p.r, p.k);
      profile.base_edges.assign(c.hypergraph.edges().begin(), c.hypergraph.edges().end());
      profile.edge_probability = 0.1 * unit_interval(rng);
      t.label = std::string("perturbed ") + family_name(p.family) + (p.k ? " k=" + std::to_string(*p.k) : "");
    } else {
      profile.edge_probability = detail::trial_probability(cfg, rng);
      t.label = "bernoulli";
    }
    Hypergraph h;
    try {
      h = sample_hypergraph(cfg.n, cfg.r, profile, rng());
    } catch (const InfeasibleError& e) {
      t.outcome = Outcome::vacuous;
      t.note = e.what();
      return;
    }
    t.m = h.edge_count();
    t.degrees = detail::degrees_of(h);
    const auto d = degree_sequence(h);
    const auto conj = conjecture_r_uniform(d, cfg.r);
    if (!conj.satisfied() || posa_r_uniform(d, cfg.r).satisfied()) {
      t.outcome = Outcome::vacuous;
      return;
    }
    SearchBudget budget = cfg.budget;
    budget.seed = trial_seed(cfg.seed ^ 0x5eed, i);
    const auto result = detail::decide(h, budget);
    switch (result.status) {
      case SearchStatus::cycle:
        t.outcome = verify_berge_cycle(h, *result.cycle) ? Outcome::pass : Outcome::fail;
        break;
      case SearchStatus::unknown:
        t.outcome = Outcome::unknown;
        break;
      case SearchStatus::none_exists:
        t.outcome = Outcome::fail;
        found[i] = Counterexample{i, Theorem::conjecture, cfg.r, false, h, conj, true, budget,
                                  "conjecture (candidate counterexample; re-verify independently)"};
        t.note = "COUNTEREXAMPLE CANDIDATE";
        break;
    }
  });
  for (auto& c : found)
    if (c) report.counterexamples.push_back(std::move(*c));
  return report;
}

inline CampaignReport run_campaign(const CampaignConfig& cfg) {
  switch (cfg.kind) {
    case CampaignKind::verify: return verify_theorem_campaign(cfg);
    case CampaignKind::sharpness: return sharpness_campaign(cfg);
    case CampaignKind::conjecture: return conjecture_search(cfg);
  }
  throw PreconditionError("unknown campaign kind");
}

// ---- serialization -------------------------------------------------------

inline nlohmann::json budget_to_json(const SearchBudget& b) {
  return {{"max_nodes", b.max_nodes}, {"time_limit_seconds", b.time_limit_seconds}, {"seed", b.seed}};
}

inline SearchBudget budget_from_json(const nlohmann::json& j) {
  SearchBudget b;
  b.max_nodes = j.at("max_nodes").get<std::uint64_t>();
  b.time_limit_seconds = j.at("time_limit_seconds").get<double>();
  b.seed = j.at("seed").get<std::uint64_t>();
  return b;
}

inline nlohmann::json counterexample_to_json(const Counterexample& c) {
  return {{"type", "counterexample"},
          {"trial", c.trial},
          {"theorem", theorem_name(c.theorem)},
          {"r", c.r},
          {"forced", c.forced},
          {"host", hypergraph_to_json(c.hypergraph)},
          {"report", report_to_json(c.report)},
          {"none_exists_proof", c.none_exists_proof},
          {"budget", budget_to_json(c.budget)},
          {"suspect", c.suspect}};
}

inline Theorem theorem_from_name(const std::string& name) {
  for (auto t : {Theorem::posa, Theorem::chvatal, Theorem::r_uniform, Theorem::non_uniform, Theorem::conjecture})
    if (name == theorem_name(t)) return t;
  throw PreconditionError("unknown theorem '" + name + "'");
}

// Re-derives a counterexample's verdicts from its serialized form alone: the
// checker must accept the recomputed degree sequence exactly as recorded, and
// the exact search under the stored budget must again exhaust without a cycle.
inline bool reverify_counterexample(const nlohmann::json& j) {
  const auto h = hypergraph_from_json(j.at("host"));
  const auto theorem = theorem_from_name(j.at("theorem").get<std::string>());
  const auto report = check_sequence(theorem, degree_sequence(h), j.at("r").get<std::size_t>(), j.at("forced").get<bool>());
  if (report_to_json(report) != j.at("report")) return false;
  const auto result = find_hamiltonian_berge_cycle(h, budget_from_json(j.at("budget")));
  const bool none = result.status == SearchStatus::none_exists;
  return none == j.at("none_exists_proof").get<bool>();
}

inline std::string join(const std::vector<std::uint64_t>& values) {
  std::string s;
  for (std::size_t i = 0; i < values.size(); ++i) s += (i ? " " : "") + std::to_string(values[i]);
  return s;
}

inline nlohmann::json campaign_to_json(const CampaignReport& report) {
  const auto& c = report.config;
  nlohmann::json j;
  j["campaign"] = campaign_name(c.kind);
  if (c.kind == CampaignKind::verify) j["theorem"] = theorem_name(c.theorem);
  j["n"] = c.n;
  j["r"] = c.r;
  j["samples"] = report.trials.size();
  j["seed"] = c.seed;
  j["budget"] = budget_to_json(c.budget);
  j["forced"] = c.force;
  j["trials"] = nlohmann::json::array();
  for (const auto& t : report.trials)
    j["trials"].push_back({{"trial", t.index},
                           {"label", t.label},
                           {"n", t.n},
                           {"m", t.m},
                           {"degrees", t.degrees},
                           {"outcome", outcome_name(t.outcome)},
                           {"note", t.note}});
  j["summary"] = {{"pass", report.count(Outcome::pass)},
                  {"fail", report.count(Outcome::fail)},
                  {"unknown", report.count(Outcome::unknown)},
                  {"vacuous", report.count(Outcome::vacuous)}};
  j["counterexamples"] = nlohmann::json::array();
  for (const auto& ce : report.counterexamples) j["counterexamples"].push_back(counterexample_to_json(ce));
  return j;
}

// One record per trial, then a summary block. Contains nothing that depends
// on timing, so equal configurations give byte-identical text.
inline std::string campaign_to_text(const CampaignReport& report) {
  const auto& c = report.config;
  std::ostringstream out;
  out << "campaign: " << campaign_name(c.kind) << '\n';
  if (c.kind == CampaignKind::verify)
    out << "theorem: " << theorem_name(c.theorem) << (c.force ? " (forced)" : "") << '\n';
  out << (c.kind == CampaignKind::sharpness ? "max_n: " : "n: ") << c.n << '\n';
  if (c.kind != CampaignKind::sharpness) out << "r: " << c.r << '\n';
  out << "seed: " << c.seed << '\n';
  out << "budget_nodes: " << c.budget.max_nodes << '\n';
  for (const auto& t : report.trials) {
    out << "trial " << t.index;
    if (!t.label.empty()) out << " [" << t.label << "]";
    out << " n=" << t.n << " m=" << t.m << " degrees=(" << join(t.degrees) << ") outcome=" << outcome_name(t.outcome);
    if (!t.note.empty()) out << " note=\"" << t.note << '"';
    out << '\n';
  }
  out << "summary:\n";
  out << "  trials: " << report.trials.size() << '\n';
  for (auto o : {Outcome::pass, Outcome::fail, Outcome::unknown, Outcome::vacuous})
    out << "  " << outcome_name(o) << ": " << report.count(o) << '\n';
  out << "  counterexamples: " << report.counterexamples.size() << '\n';
  for (const auto& ce : report.counterexamples) out << "counterexample: " << counterexample_to_json(ce).dump() << '\n';
  return out.str();
}

}  // namespace bergeham
