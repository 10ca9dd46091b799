#pragma once

#include <charconv>
#include <cstddef>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "bergeham/core/berge.hpp"
#include "bergeham/core/hypergraph.hpp"

namespace bergeham {

// .bhg text format:
//   line 1:   n m
//   m lines:  ascending vertex ids of one edge
// '#' starts a comment running to end of line; blank lines are ignored.
namespace detail {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

inline std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i >= line.size()) break;
    const std::size_t begin = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    out.push_back({line.substr(begin, i - begin), begin + 1});
  }
  return out;
}

inline std::size_t parse_count(const Token& t, std::size_t line) {
  std::size_t value = 0;
  const auto* first = t.text.data();
  const auto* last = first + t.text.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last)
    throw ParseError(line, t.column, "expected a non-negative integer, got '" + std::string(t.text) + "'");
  return value;
}

}  // namespace detail

inline Hypergraph parse_bhg(std::istream& in) {
  std::string raw;
  std::size_t line_no = 0;
  std::optional<std::size_t> n;
  std::size_t m = 0;
  std::vector<VertexSet> edges;
  std::vector<std::size_t> edge_lines;

  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto tokens = detail::tokenize(line);
    if (tokens.empty()) continue;

    if (!n) {
      if (tokens.size() != 2)
        throw ParseError(line_no, tokens.front().column, "header must be 'n m'");
      n = detail::parse_count(tokens[0], line_no);
      m = detail::parse_count(tokens[1], line_no);
      if (*n > kMaxVertices)
        throw ParseError(line_no, tokens[0].column, "n exceeds the supported maximum of " + std::to_string(kMaxVertices));
      continue;
    }
    if (edges.size() == m)
      throw ParseError(line_no, tokens.front().column, "more edge lines than the declared m=" + std::to_string(m));

    VertexSet e;
    std::optional<std::size_t> previous;
    for (const auto& t : tokens) {
      const std::size_t v = detail::parse_count(t, line_no);
      if (v >= *n) throw ParseError(line_no, t.column, "vertex " + std::to_string(v) + " out of range 0.." + std::to_string(*n - 1));
      if (previous && v <= *previous) throw ParseError(line_no, t.column, "vertex ids must be strictly ascending");
      previous = v;
      e.insert(v);
    }
    for (std::size_t k = 0; k < edges.size(); ++k)
      if (edges[k] == e)
        throw ParseError(line_no, 1, "duplicate edge (first seen on line " + std::to_string(edge_lines[k]) + ")");
    edges.push_back(e);
    edge_lines.push_back(line_no);
  }
  if (!n) throw ParseError(line_no + 1, 1, "missing 'n m' header");
  if (edges.size() != m)
    throw ParseError(line_no + 1, 1,
                     "expected " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
  return Hypergraph(*n, std::move(edges));
}

inline Hypergraph parse_bhg(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_bhg(in);
}

inline Hypergraph read_bhg(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return parse_bhg(in);
}

inline void write_bhg(std::ostream& out, const Hypergraph& h) {
  out << h.vertex_count() << ' ' << h.edge_count() << '\n';
  for (const auto& e : h.edges()) {
    bool first = true;
    for (auto v : e) {
      if (!first) out << ' ';
      out << v;
      first = false;
    }
    out << '\n';
  }
}

inline std::string to_bhg(const Hypergraph& h) {
  std::ostringstream out;
  write_bhg(out, h);
  return out.str();
}

// Path/cycle certificate. `edges` repeats the member lists of the named edge
// ids so a reader can audit the certificate by eye; verification insists that
// the two agree. The host hypergraph is embedded so the document stands alone.
struct Certificate {
  enum class Kind { path, cycle };

  Kind kind = Kind::cycle;
  std::vector<VertexId> vertices;
  std::vector<EdgeId> edge_ids;
  std::vector<std::vector<VertexId>> edges;
  std::optional<Hypergraph> host;

  static Certificate of(const Hypergraph& h, const BergeCycle& c) {
    return make(h, Kind::cycle, c.vertices, c.edges);
  }
  static Certificate of(const Hypergraph& h, const BergePath& p) {
    return make(h, Kind::path, p.vertices, p.edges);
  }

 private:
  static Certificate make(const Hypergraph& h, Kind kind, const std::vector<VertexId>& vs,
                          const std::vector<EdgeId>& es) {
    Certificate c;
    c.kind = kind;
    c.vertices = vs;
    c.edge_ids = es;
    for (auto e : es) c.edges.push_back(h.edge(e).to_vector());
    c.host = h;
    return c;
  }
};

inline nlohmann::json hypergraph_to_json(const Hypergraph& h) {
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& e : h.edges()) edges.push_back(e.to_vector());
  return {{"n", h.vertex_count()}, {"edges", std::move(edges)}};
}

inline Hypergraph hypergraph_from_json(const nlohmann::json& j) {
  return Hypergraph::from_lists(j.at("n").get<std::size_t>(), j.at("edges").get<std::vector<std::vector<VertexId>>>());
}

inline nlohmann::json certificate_to_json(const Certificate& c) {
  nlohmann::json j;
  j["type"] = c.kind == Certificate::Kind::cycle ? "cycle" : "path";
  j["vertices"] = c.vertices;
  j["edge_ids"] = c.edge_ids;
  j["edges"] = c.edges;
  if (c.host) j["host"] = hypergraph_to_json(*c.host);
  return j;
}

namespace detail {

inline std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t offset) {
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

}  // namespace detail

inline Certificate parse_certificate(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    const auto [line, column] = detail::line_column(text, e.byte == 0 ? 0 : e.byte - 1);
    throw ParseError(line, column, "malformed certificate JSON");
  }
  Certificate c;
  try {
    const auto type = j.at("type").get<std::string>();
    if (type == "cycle")
      c.kind = Certificate::Kind::cycle;
    else if (type == "path")
      c.kind = Certificate::Kind::path;
    else
      throw ParseError(1, 1, "unknown certificate type '" + type + "'");
    c.vertices = j.at("vertices").get<std::vector<VertexId>>();
    c.edge_ids = j.at("edge_ids").get<std::vector<EdgeId>>();
    c.edges = j.at("edges").get<std::vector<std::vector<VertexId>>>();
    if (j.contains("host")) c.host = hypergraph_from_json(j.at("host"));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(1, 1, std::string("certificate field error: ") + e.what());
  }
  return c;
}

// Checks the certificate against `host` (or its embedded hypergraph): the
// redundant edge lists must match the ids, and the sequence must be a valid
// Berge path/cycle. Hamiltonian cycles additionally must cover every vertex.
inline Verdict verify_certificate(const Certificate& c, const Hypergraph* host = nullptr) {
  if (!host) {
    if (!c.host) return Verdict::fail(Defect::shape, 0, "no host hypergraph given or embedded");
    host = &*c.host;
  }
  if (c.edges.size() != c.edge_ids.size())
    return Verdict::fail(Defect::shape, 0, "edge_ids and edges differ in length");
  for (std::size_t k = 0; k < c.edge_ids.size(); ++k) {
    if (c.edge_ids[k] >= host->edge_count())
      return Verdict::fail(Defect::edge_out_of_range, k + 1, "edge id out of range");
    if (host->edge(c.edge_ids[k]).to_vector() != c.edges[k])
      return Verdict::fail(Defect::incidence_broken, k + 1,
                           "listed members of edge " + std::to_string(c.edge_ids[k]) + " do not match the host");
  }
  if (c.kind == Certificate::Kind::path) return verify_berge_path(*host, BergePath{c.vertices, c.edge_ids});
  auto verdict = verify_berge_cycle(*host, BergeCycle{c.vertices, c.edge_ids});
  if (verdict && c.vertices.size() != host->vertex_count())
    return Verdict::fail(Defect::shape, 0, "cycle is not Hamiltonian");
  return verdict;
}

}  // namespace bergeham
