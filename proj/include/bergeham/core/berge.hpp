#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "bergeham/core/hypergraph.hpp"

namespace bergeham {

// v_1, e_1, v_2, ..., e_t, v_{t+1}: vertex ids and edge ids into a host hypergraph.
struct BergePath {
  std::vector<VertexId> vertices;
  std::vector<EdgeId> edges;

  std::size_t length() const { return edges.size(); }
  VertexId start() const { return vertices.front(); }
  VertexId finish() const { return vertices.back(); }
  // 1-based position lookup, as in v_i.
  VertexId at(std::size_t position) const { return vertices.at(position - 1); }
  EdgeId edge_at(std::size_t position) const { return edges.at(position - 1); }

  friend bool operator==(const BergePath&, const BergePath&) = default;
  friend auto operator<=>(const BergePath&, const BergePath&) = default;
};

// v_1, e_1, ..., v_t, e_t with e_t closing back to v_1.
struct BergeCycle {
  std::vector<VertexId> vertices;
  std::vector<EdgeId> edges;

  std::size_t length() const { return vertices.size(); }

  friend bool operator==(const BergeCycle&, const BergeCycle&) = default;
};

enum class Defect {
  none,
  shape,                // vertex/edge counts do not fit together
  vertex_out_of_range,
  edge_out_of_range,
  duplicate_vertex,
  duplicate_edge,
  incidence_broken,     // some e_i misses v_i or v_{i+1}
};

inline const char* defect_name(Defect d) {
  switch (d) {
    case Defect::none: return "none";
    case Defect::shape: return "shape";
    case Defect::vertex_out_of_range: return "vertex out of range";
    case Defect::edge_out_of_range: return "edge out of range";
    case Defect::duplicate_vertex: return "duplicate vertex";
    case Defect::duplicate_edge: return "duplicate edge";
    case Defect::incidence_broken: return "incidence broken";
  }
  return "?";
}

// Outcome of a certificate check; carries the first violated constraint.
struct Verdict {
  Defect defect = Defect::none;
  std::size_t index = 0;  // 1-based position of the offending element, 0 if not applicable
  std::string message;

  bool valid() const { return defect == Defect::none; }
  explicit operator bool() const { return valid(); }

  static Verdict fail(Defect d, std::size_t index, std::string message) {
    return Verdict{d, index, std::move(message)};
  }
};

namespace detail {

inline Verdict check_alternating(const Hypergraph& h, const std::vector<VertexId>& vertices,
                                 const std::vector<EdgeId>& edges, bool cyclic) {
  VertexSet seen_vertices;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i] >= h.vertex_count())
      return Verdict::fail(Defect::vertex_out_of_range, i + 1, "vertex " + std::to_string(vertices[i]) + " out of range");
    if (seen_vertices.contains(vertices[i]))
      return Verdict::fail(Defect::duplicate_vertex, i + 1, "vertex " + std::to_string(vertices[i]) + " repeated");
    seen_vertices.insert(vertices[i]);
  }
  std::vector<bool> seen_edges(h.edge_count(), false);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (edges[i] >= h.edge_count())
      return Verdict::fail(Defect::edge_out_of_range, i + 1, "edge id " + std::to_string(edges[i]) + " out of range");
    if (seen_edges[edges[i]])
      return Verdict::fail(Defect::duplicate_edge, i + 1, "edge id " + std::to_string(edges[i]) + " repeated");
    seen_edges[edges[i]] = true;
  }
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const VertexId a = vertices[i];
    const VertexId b = vertices[cyclic ? (i + 1) % vertices.size() : i + 1];
    const VertexSet e = h.edge(edges[i]);
    if (!e.contains(a) || !e.contains(b))
      return Verdict::fail(Defect::incidence_broken, i + 1,
                           "edge " + std::to_string(edges[i]) + " does not contain both " + std::to_string(a) +
                               " and " + std::to_string(b));
  }
  return {};
}

}  // namespace detail

inline Verdict verify_berge_path(const Hypergraph& h, const BergePath& p) {
  if (p.vertices.empty() || p.vertices.size() != p.edges.size() + 1)
    return Verdict::fail(Defect::shape, 0, "a path needs exactly one more vertex than edges");
  return detail::check_alternating(h, p.vertices, p.edges, false);
}

inline Verdict verify_berge_cycle(const Hypergraph& h, const BergeCycle& c) {
  if (c.vertices.size() < 2 || c.vertices.size() != c.edges.size())
    return Verdict::fail(Defect::shape, 0, "a cycle needs at least two vertices and as many edges as vertices");
  return detail::check_alternating(h, c.vertices, c.edges, true);
}

inline bool is_hamiltonian_path(const Hypergraph& h, const BergePath& p) {
  return p.vertices.size() == h.vertex_count() && verify_berge_path(h, p).valid();
}

inline bool is_hamiltonian_cycle(const Hypergraph& h, const BergeCycle& c) {
  return c.vertices.size() == h.vertex_count() && verify_berge_cycle(h, c).valid();
}

// Positions along p are 1..|vertices|.
inline PositionSet path_positions(const BergePath& p) { return PositionSet::interval(1, p.vertices.size() + 1); }

inline void require_positions(PositionSet a, const BergePath& p) {
  if (!a.subset_of(path_positions(p))) throw PreconditionError("position set exceeds the path");
}

// A^- = {i : i+1 in A, i >= 1}; position 1 has no left neighbour and drops out.
inline PositionSet shift_left(PositionSet a, const BergePath& p) {
  require_positions(a, p);
  return PositionSet((a.bits() >> 1) & ~std::uint64_t{1});
}

// A^+ = {i+1 : i in A, i+1 <= |P|}; the last position drops out.
inline PositionSet shift_right(PositionSet a, const BergePath& p) {
  require_positions(a, p);
  return PositionSet(a.bits() << 1) & path_positions(p);
}

inline PositionSet positions_of(VertexSet s, const BergePath& p) {
  PositionSet out;
  for (std::size_t i = 0; i < p.vertices.size(); ++i)
    if (s.contains(p.vertices[i])) out.insert(i + 1);
  return out;
}

inline VertexSet vertices_at(PositionSet a, const BergePath& p) {
  VertexSet out;
  for (auto pos : a) out.insert(p.at(pos));
  return out;
}

}  // namespace bergeham
