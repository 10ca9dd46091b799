#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bergeham/core/bitset64.hpp"
#include "bergeham/core/errors.hpp"

namespace bergeham {

using VertexId = std::size_t;
using EdgeId = std::size_t;

// Canonical edge order: by size, then lexicographically on the ascending
// member lists. For equal-size sets the lexicographically smaller list is the
// one owning the lowest element of the symmetric difference.
inline bool canonical_less(VertexSet a, VertexSet b) {
  if (a.size() != b.size()) return a.size() < b.size();
  const std::uint64_t diff = a.bits() ^ b.bits();
  if (diff == 0) return false;
  return (a.bits() & (diff & (~diff + 1))) != 0;
}

// A simple hypergraph on vertices 0..n-1. Immutable once built; the edge list
// is kept in canonical order so edge ids are stable certificates.
class Hypergraph {
 public:
  Hypergraph() = default;

  Hypergraph(std::size_t n, std::vector<VertexSet> edges) : n_(n), edges_(std::move(edges)) {
    if (n_ > kMaxVertices)
      throw PreconditionError("at most " + std::to_string(kMaxVertices) + " vertices are supported, got " +
                              std::to_string(n_));
    const VertexSet all = VertexSet::interval(0, n_);
    for (const auto& e : edges_) {
      if (e.empty()) throw PreconditionError("empty edge");
      if (!e.subset_of(all)) throw DomainError("edge contains a vertex outside 0.." + std::to_string(n_ - 1));
    }
    std::sort(edges_.begin(), edges_.end(), canonical_less);
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
      throw PreconditionError("duplicate edge (only simple hypergraphs are supported)");
    index();
  }

  static Hypergraph from_lists(std::size_t n, const std::vector<std::vector<VertexId>>& lists) {
    std::vector<VertexSet> edges;
    edges.reserve(lists.size());
    for (const auto& l : lists) {
      VertexSet e;
      for (auto v : l) {
        if (v >= n) throw DomainError("vertex " + std::to_string(v) + " out of range");
        e.insert(v);
      }
      edges.push_back(e);
    }
    return Hypergraph(n, std::move(edges));
  }

  std::size_t vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  VertexSet vertices() const { return VertexSet::interval(0, n_); }

  std::span<const VertexSet> edges() const { return edges_; }
  VertexSet edge(EdgeId e) const {
    if (e >= edges_.size()) throw DomainError("edge id " + std::to_string(e) + " out of range");
    return edges_[e];
  }

  std::optional<EdgeId> find_edge(VertexSet e) const {
    const auto it = std::lower_bound(edges_.begin(), edges_.end(), e, canonical_less);
    if (it == edges_.end() || *it != e) return std::nullopt;
    return static_cast<EdgeId>(it - edges_.begin());
  }

  // Edge ids containing v, ascending (smallest edges first).
  std::span<const EdgeId> incident_edges(VertexId v) const {
    check_vertex(v);
    return incidence_[v];
  }

  std::size_t degree(VertexId v) const { return incident_edges(v).size(); }

  // Open neighborhood: vertices sharing at least one edge with v.
  VertexSet neighborhood(VertexId v) const {
    check_vertex(v);
    return adjacency_[v];
  }

  // Uniformity r if every edge has size r; nullopt for empty or mixed sizes.
  std::optional<std::size_t> uniformity() const {
    if (edges_.empty()) return std::nullopt;
    const std::size_t r = edges_.front().size();
    return edges_.back().size() == r ? std::optional<std::size_t>(r) : std::nullopt;
  }

  // The hypergraph on the same vertex set keeping only edges accepted by keep(id).
  template <class Pred>
  Hypergraph filter_edges(Pred&& keep) const {
    std::vector<VertexSet> kept;
    for (EdgeId e = 0; e < edges_.size(); ++e)
      if (keep(e)) kept.push_back(edges_[e]);
    return Hypergraph(n_, std::move(kept));
  }

  void check_vertex(VertexId v) const {
    if (v >= n_)
      throw DomainError("vertex " + std::to_string(v) + " out of range for n=" + std::to_string(n_));
  }

  friend bool operator==(const Hypergraph& a, const Hypergraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  void index() {
    incidence_.assign(n_, {});
    adjacency_.assign(n_, VertexSet{});
    for (EdgeId e = 0; e < edges_.size(); ++e) {
      for (auto v : edges_[e]) {
        incidence_[v].push_back(e);
        adjacency_[v] |= edges_[e];
      }
    }
    for (VertexId v = 0; v < n_; ++v) adjacency_[v].erase(v);
  }

  std::size_t n_ = 0;
  std::vector<VertexSet> edges_;
  std::vector<std::vector<EdgeId>> incidence_;
  std::vector<VertexSet> adjacency_;
};

inline std::size_t degree(const Hypergraph& h, VertexId v) { return h.degree(v); }

inline VertexSet neighborhood(const Hypergraph& h, VertexId v) { return h.neighborhood(v); }

// N[S]: union of closed neighborhoods of the members of s.
inline VertexSet closed_neighborhood_set(const Hypergraph& h, VertexSet s) {
  if (!s.subset_of(h.vertices())) throw DomainError("vertex set exceeds the vertex range");
  VertexSet out = s;
  for (auto v : s) out |= h.neighborhood(v);
  return out;
}

// Ascending degree sequence d_1 <= ... <= d_n.
class DegreeSequence {
 public:
  enum class Provenance { computed, given };

  DegreeSequence() = default;

  static DegreeSequence given(std::vector<std::uint64_t> values) {
    if (!std::is_sorted(values.begin(), values.end()))
      throw PreconditionError("degree sequence must be ascending");
    return DegreeSequence(std::move(values), Provenance::given);
  }

  static DegreeSequence of(const Hypergraph& h) {
    std::vector<std::uint64_t> values(h.vertex_count());
    for (VertexId v = 0; v < h.vertex_count(); ++v) values[v] = h.degree(v);
    std::sort(values.begin(), values.end());
    return DegreeSequence(std::move(values), Provenance::computed);
  }

  std::size_t size() const { return values_.size(); }
  std::span<const std::uint64_t> values() const { return values_; }
  Provenance provenance() const { return provenance_; }

  // 1-based access matching d_i.
  std::uint64_t d(std::size_t i) const {
    if (i == 0 || i > values_.size())
      throw DomainError("degree index " + std::to_string(i) + " outside 1.." + std::to_string(values_.size()));
    return values_[i - 1];
  }

  std::uint64_t minimum() const { return values_.empty() ? 0 : values_.front(); }

  friend bool operator==(const DegreeSequence& a, const DegreeSequence& b) { return a.values_ == b.values_; }

 private:
  DegreeSequence(std::vector<std::uint64_t> values, Provenance p) : values_(std::move(values)), provenance_(p) {}

  std::vector<std::uint64_t> values_;
  Provenance provenance_ = Provenance::given;
};

inline DegreeSequence degree_sequence(const Hypergraph& h) { return DegreeSequence::of(h); }

// Vertex/edge incidence graph: class A = vertices, class B = edges.
struct IncidenceBipartite {
  std::size_t left_count = 0;
  std::size_t right_count = 0;
  std::vector<std::vector<EdgeId>> left_adjacency;
  std::vector<VertexSet> right_adjacency;

  std::size_t right_degree(EdgeId e) const { return right_adjacency.at(e).size(); }
  bool adjacent(VertexId v, EdgeId e) const { return right_adjacency.at(e).contains(v); }
};

inline IncidenceBipartite incidence_bipartite(const Hypergraph& h) {
  IncidenceBipartite g;
  g.left_count = h.vertex_count();
  g.right_count = h.edge_count();
  g.right_adjacency.assign(h.edges().begin(), h.edges().end());
  g.left_adjacency.reserve(h.vertex_count());
  for (VertexId v = 0; v < h.vertex_count(); ++v) {
    const auto inc = h.incident_edges(v);
    g.left_adjacency.emplace_back(inc.begin(), inc.end());
  }
  return g;
}

}  // namespace bergeham
