#pragma once

#include <charconv>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bergeham/conditions/format.hpp"
#include "bergeham/constructions/constructions.hpp"
#include "bergeham/core/io.hpp"
#include "bergeham/harness/campaign.hpp"
#include "bergeham/solver/exact_search.hpp"
#include "bergeham/solver/heuristic.hpp"
#include "bergeham/solver/rotation.hpp"

namespace bergeham::cli {

enum ExitCode : int { kSuccess = 0, kNegative = 1, kUnknown = 2, kUsage = 64 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Integers separated by whitespace or commas; '#' comments.
inline std::vector<std::uint64_t> parse_sequence(std::string_view text) {
  std::vector<std::uint64_t> out;
  std::size_t line = 1, column = 1, i = 0;
  auto advance = [&] {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
    ++i;
  };
  while (i < text.size()) {
    const char c = text[i];
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') advance();
    } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == ',') {
      advance();
    } else {
      const std::size_t begin = i, at = column;
      while (i < text.size() && std::string_view(" \t\r\n,#").find(text[i]) == std::string_view::npos) advance();
      std::uint64_t value = 0;
      const auto token = text.substr(begin, i - begin);
      const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
      if (ec != std::errc{} || ptr != token.data() + token.size())
        throw ParseError(line, at, "expected a non-negative integer, got '" + std::string(token) + "'");
      out.push_back(value);
    }
  }
  if (out.empty()) throw ParseError(line, column, "empty degree sequence");
  return out;
}

inline std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write '" + path + "'");
  out << text;
}

inline Hypergraph load_bhg(const std::string& path) {
  const auto text = slurp(path);
  try {
    return parse_bhg(std::string_view(text));
  } catch (const ParseError& e) {
    throw ParseError(e.line(), e.column(), path + ": " + e.detail());
  }
}

inline Theorem parse_theorem(const std::string& s) {
  if (s == "r-uniform") return Theorem::r_uniform;
  if (s == "non-uniform") return Theorem::non_uniform;
  if (s == "posa") return Theorem::posa;
  if (s == "chvatal") return Theorem::chvatal;
  if (s == "conjecture") return Theorem::conjecture;
  throw UsageError("unknown theorem '" + s + "'");
}

inline Family parse_family(const std::string& s) {
  if (s == "h1") return Family::h1;
  if (s == "h2") return Family::h2;
  if (s == "h3") return Family::h3;
  throw UsageError("unknown family '" + s + "'");
}

// "v,e,v,e,...,v" with 0-based ids.
inline BergePath parse_path(const std::string& text) {
  std::vector<std::size_t> ids;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    std::size_t value = 0;
    const auto b = item.find_first_not_of(' '), e = item.find_last_not_of(' ');
    if (b == std::string::npos) throw UsageError("--path has an empty entry");
    const std::string_view token = std::string_view(item).substr(b, e - b + 1);
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size())
      throw UsageError("--path entry '" + std::string(token) + "' is not an id");
    ids.push_back(value);
  }
  if (ids.size() % 2 == 0) throw UsageError("--path must alternate vertex,edge,...,vertex");
  BergePath p;
  for (std::size_t k = 0; k < ids.size(); ++k) (k % 2 ? p.edges : p.vertices).push_back(ids[k]);
  return p;
}

inline std::string join_ids(VertexSet s) {
  std::string out;
  for (auto v : s) out += (out.empty() ? "" : " ") + std::to_string(v);
  return out;
}

template <class T>
std::string join_list(const std::vector<T>& values, const char* sep = " ") {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) out += (i ? sep : "") + std::to_string(values[i]);
  return out;
}

struct Options {
  bool json = false;

  // check
  std::string input, seq_inline, seq_file, graph_file, theorem = "r-uniform";
  std::size_t r = 0;
  bool force = false;

  // generate
  std::string family;
  std::size_t n = 0;
  std::optional<std::size_t> k;
  std::string out_path;
  bool predict = false;

  // solve / rotate / verify-cert
  std::uint64_t budget_nodes = SearchBudget{}.max_nodes;
  double time_limit = SearchBudget{}.time_limit_seconds;
  std::uint64_t seed = 1;
  unsigned threads = 1;
  std::string certificate_path;
  bool heuristic = false;
  std::string path_text;
  std::size_t max_paths = ClosureOptions{}.max_paths;

  // campaign
  std::string campaign_kind;
  std::size_t samples = 100;
  double p_min = 0.05, p_max = 0.5;
  std::vector<std::string> families;
  std::string report_path;
};

inline int cmd_check(const Options& o, std::ostream& out) {
  int modes = !o.input.empty() + !o.seq_inline.empty() + !o.seq_file.empty() + !o.graph_file.empty();
  if (modes != 1) throw UsageError("check takes exactly one input: INPUT, --seq, --seq-file or --graph");
  std::vector<std::uint64_t> values;
  std::optional<Hypergraph> h;
  if (!o.seq_inline.empty()) {
    values = parse_sequence(o.seq_inline);
  } else if (!o.seq_file.empty()) {
    values = parse_sequence(slurp(o.seq_file));
  } else if (!o.graph_file.empty()) {
    h = load_bhg(o.graph_file);
  } else if (o.input.starts_with("seq:")) {
    values = parse_sequence(std::string_view(o.input).substr(4));
  } else if (o.input.ends_with(".bhg")) {
    h = load_bhg(o.input);
  } else {
    values = parse_sequence(slurp(o.input));
  }
  const DegreeSequence d = h ? degree_sequence(*h) : DegreeSequence::given(values);
  const Theorem theorem = parse_theorem(o.theorem);
  const bool uses_r = theorem == Theorem::r_uniform || theorem == Theorem::conjecture;
  if (uses_r && o.r == 0) throw UsageError("--r is required for the r-uniform and conjecture checks");
  if (h && uses_r && h->uniformity() != o.r)
    throw UsageError("hypergraph is not " + std::to_string(o.r) + "-uniform");
  const auto report = check_sequence(theorem, d, o.r, o.force);
  const std::vector<std::uint64_t> seq(d.values().begin(), d.values().end());
  if (o.json) {
    auto j = report_to_json(report);
    j["sequence"] = seq;
    out << j.dump(2) << '\n';
  } else {
    out << "sequence: " << join_list(seq) << '\n';
    write_report(out, report);
  }
  return report.satisfied() ? kSuccess : kNegative;
}

inline int cmd_generate(const Options& o, std::ostream& out) {
  const Family family = parse_family(o.family);
  const auto spec = construction_spec(family, o.n, o.r, o.k);
  const auto predicted = predicted_degree_sequence(spec);
  const std::vector<std::uint64_t> pred(predicted.values().begin(), predicted.values().end());
  if (o.predict) {
    if (o.json)
      out << nlohmann::json{{"family", family_name(family)}, {"n", o.n}, {"r", o.r}, {"predicted", pred}}.dump(2)
          << '\n';
    else
      out << "predicted: " << join_list(pred) << '\n';
    return kSuccess;
  }
  const auto h = build_construction(spec);
  if (!o.out_path.empty()) write_file(o.out_path, to_bhg(h));
  if (o.json) {
    out << nlohmann::json{{"family", family_name(family)},
                          {"n", o.n},
                          {"r", o.r},
                          {"predicted", pred},
                          {"hypergraph", hypergraph_to_json(h)}}
               .dump(2)
        << '\n';
  } else if (o.out_path.empty()) {
    write_bhg(out, h);
  } else {
    out << "wrote: " << o.out_path << " (" << h.vertex_count() << " vertices, " << h.edge_count() << " edges)\n";
    out << "predicted: " << join_list(pred) << '\n';
  }
  return kSuccess;
}

inline SearchBudget budget_of(const Options& o) {
  SearchBudget b;
  b.max_nodes = o.budget_nodes;
  b.time_limit_seconds = o.time_limit;
  b.seed = o.seed;
  b.threads = o.threads;
  return b;
}

inline int cmd_solve(const Options& o, std::ostream& out) {
  const auto h = load_bhg(o.input);
  const auto budget = budget_of(o);
  const auto result = o.heuristic ? extend_and_close(h, budget) : find_hamiltonian_berge_cycle(h, budget);
  std::optional<Certificate> cert;
  if (result.cycle) cert = Certificate::of(h, *result.cycle);
  if (cert && !o.certificate_path.empty()) write_file(o.certificate_path, certificate_to_json(*cert).dump(2) + "\n");
  if (o.json) {
    nlohmann::json j{{"status", status_name(result.status)}, {"nodes", result.nodes}};
    if (cert) j["certificate"] = certificate_to_json(*cert);
    out << j.dump(2) << '\n';
  } else {
    out << "status: " << status_name(result.status) << '\n';
    out << "nodes: " << result.nodes << '\n';
    if (result.cycle) {
      out << "vertices: " << join_list(result.cycle->vertices) << '\n';
      out << "edges: " << join_list(result.cycle->edges) << '\n';
    }
  }
  switch (result.status) {
    case SearchStatus::cycle: return kSuccess;
    case SearchStatus::none_exists: return kNegative;
    case SearchStatus::unknown: return kUnknown;
  }
  return kUnknown;
}

inline int cmd_rotate(const Options& o, std::ostream& out) {
  const auto h = load_bhg(o.input);
  const auto p = parse_path(o.path_text);
  if (const auto v = verify_berge_path(h, p); !v) throw UsageError("--path is not a Berge path: " + v.message);
  if (!is_hamiltonian_path(h, p)) throw UsageError("--path must visit every vertex");
  ClosureOptions options;
  options.max_paths = o.max_paths;
  const auto state = rotation_closure(h, p, options);
  const auto claim = check_claim1(h, state);
  if (o.json) {
    out << nlohmann::json{{"fixed_end", state.fixed_end},
                          {"prefix_bound", state.prefix_bound},
                          {"reachable_ends", state.reachable_ends.to_vector()},
                          {"claim1", {{"required", claim.required.to_vector()},
                                      {"missing", claim.missing.to_vector()},
                                      {"holds", claim.holds()}}}}
               .dump(2)
        << '\n';
  } else {
    out << "fixed_end: " << state.fixed_end << '\n';
    out << "prefix_bound: " << state.prefix_bound << '\n';
    out << "reachable_ends: " << join_ids(state.reachable_ends) << '\n';
    out << "claim1_required: " << join_ids(claim.required) << '\n';
    out << "claim1_missing: " << join_ids(claim.missing) << '\n';
    out << "claim1: " << (claim.holds() ? "holds" : "fails") << '\n';
  }
  return claim.holds() ? kSuccess : kNegative;
}

inline int cmd_campaign(const Options& o, std::ostream& out) {
  CampaignConfig cfg;
  if (o.campaign_kind == "verify")
    cfg.kind = CampaignKind::verify;
  else if (o.campaign_kind == "sharpness")
    cfg.kind = CampaignKind::sharpness;
  else
    cfg.kind = CampaignKind::conjecture;
  cfg.theorem = parse_theorem(o.theorem);
  cfg.n = o.n;
  cfg.r = o.r;
  cfg.k = o.k;
  if (!o.families.empty()) {
    cfg.families.clear();
    for (const auto& f : o.families) cfg.families.push_back(parse_family(f));
  }
  cfg.samples = o.samples;
  cfg.p_min = o.p_min;
  cfg.p_max = o.p_max;
  cfg.seed = o.seed;
  cfg.budget = budget_of(o);
  cfg.budget.threads = 1;
  cfg.force = o.force;
  cfg.threads = o.threads;
  const auto report = run_campaign(cfg);
  const std::string text = o.json ? campaign_to_json(report).dump(2) + "\n" : campaign_to_text(report);
  if (o.report_path.empty()) {
    out << text;
  } else {
    write_file(o.report_path, text);
    out << "report: " << o.report_path << '\n';
    for (auto x : {Outcome::pass, Outcome::fail, Outcome::unknown, Outcome::vacuous})
      out << outcome_name(x) << ": " << report.count(x) << '\n';
  }
  if (report.count(Outcome::fail)) return kNegative;
  return report.count(Outcome::unknown) ? kUnknown : kSuccess;
}

inline int cmd_verify_cert(const Options& o, std::ostream& out) {
  const auto text = slurp(o.input);
  const auto cert = parse_certificate(text);
  std::optional<Hypergraph> host;
  if (!o.graph_file.empty()) host = load_bhg(o.graph_file);
  Verdict v = verify_certificate(cert, host ? &*host : nullptr);
  // A certificate checked against an external graph must also agree with the
  // host it embeds, if any.
  if (v && host && cert.host && !(*cert.host == *host))
    v = Verdict::fail(Defect::shape, 0, "embedded host differs from --graph");
  if (o.json) {
    out << nlohmann::json{{"valid", v.valid()}, {"defect", defect_name(v.defect)}, {"index", v.index},
                          {"message", v.message}}
               .dump(2)
        << '\n';
  } else {
    out << "valid: " << (v ? "true" : "false") << '\n';
    if (!v) out << "defect: " << defect_name(v.defect) << " at " << v.index << ": " << v.message << '\n';
  }
  return v ? kSuccess : kNegative;
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Degree conditions, sharpness constructions and exact search for Hamiltonian Berge cycles"};
  app.require_subcommand(1);
  Options o;
  app.add_flag("--json", o.json, "machine-readable JSON output");

  auto* check = app.add_subcommand("check", "check a degree sequence against a sufficient condition");
  check->add_option("input", o.input, "seq:\"d1 d2 ...\", a .bhg file, or a sequence file");
  check->add_option("--seq", o.seq_inline, "inline degree sequence");
  check->add_option("--seq-file", o.seq_file, "file holding a degree sequence");
  check->add_option("--graph", o.graph_file, ".bhg hypergraph whose sequence is checked");
  check->add_option("--theorem", o.theorem, "posa|chvatal|r-uniform|non-uniform|conjecture")
      ->check(CLI::IsMember({"posa", "chvatal", "r-uniform", "non-uniform", "conjecture"}));
  check->add_option("--r", o.r, "edge size");
  check->add_flag("--force", o.force, "allow n <= 40 for the non-uniform check");

  auto* gen = app.add_subcommand("generate", "build a sharpness construction");
  gen->add_option("--family", o.family)->required()->check(CLI::IsMember({"h1", "h2", "h3"}));
  gen->add_option("--n", o.n)->required();
  gen->add_option("--r", o.r)->required();
  gen->add_option("--k", o.k);
  gen->add_option("--out", o.out_path, "write the hypergraph as .bhg");
  gen->add_flag("--predict", o.predict, "print the predicted degree sequence only");

  auto add_budget = [&](CLI::App* sub) {
    sub->add_option("--budget-nodes", o.budget_nodes, "search node budget");
    sub->add_option("--time-limit", o.time_limit, "seconds");
    sub->add_option("--seed", o.seed);
    sub->add_option("--threads", o.threads)->check(CLI::PositiveNumber);
  };

  auto* solve = app.add_subcommand("solve", "decide whether a hypergraph has a Hamiltonian Berge cycle");
  solve->add_option("input", o.input, ".bhg file")->required();
  add_budget(solve);
  solve->add_option("--certificate", o.certificate_path, "write the cycle certificate here");
  solve->add_flag("--heuristic", o.heuristic, "rotation-extension only (never proves absence)");

  auto* rotate = app.add_subcommand("rotate", "rotation closure and containment check for a Hamiltonian path");
  rotate->add_option("input", o.input, ".bhg file")->required();
  rotate->add_option("--path", o.path_text, "v,e,v,e,...,v")->required();
  rotate->add_option("--max-paths", o.max_paths);

  auto* campaign = app.add_subcommand("campaign", "run a verification campaign");
  campaign->add_option("kind", o.campaign_kind)->required()->check(CLI::IsMember({"verify", "sharpness", "conjecture"}));
  campaign->add_option("--n", o.n, "vertex count (largest n for sharpness)")->required();
  campaign->add_option("--r", o.r);
  campaign->add_option("--k", o.k);
  campaign->add_option("--family", o.families, "sharpness families (default all)");
  campaign->add_option("--theorem", o.theorem, "r-uniform|non-uniform (verify)")
      ->check(CLI::IsMember({"r-uniform", "non-uniform"}));
  campaign->add_flag("--force", o.force);
  campaign->add_option("--samples", o.samples);
  campaign->add_option("--p-min", o.p_min);
  campaign->add_option("--p-max", o.p_max);
  campaign->add_option("--report", o.report_path, "write the report here");
  add_budget(campaign);

  auto* vc = app.add_subcommand("verify-cert", "check a certificate");
  vc->add_option("input", o.input, "certificate file")->required();
  vc->add_option("--graph", o.graph_file, ".bhg host to check against");

  for (auto* sub : {check, gen, solve, rotate, campaign, vc}) sub->add_flag("--json", o.json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    const CLI::App* target = &app;
    for (const auto* sub : app.get_subcommands()) target = sub;
    out << target->help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (check->parsed()) return cmd_check(o, out);
    if (gen->parsed()) return cmd_generate(o, out);
    if (solve->parsed()) return cmd_solve(o, out);
    if (rotate->parsed()) return cmd_rotate(o, out);
    if (campaign->parsed()) return cmd_campaign(o, out);
    if (vc->parsed()) return cmd_verify_cert(o, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace bergeham::cli
