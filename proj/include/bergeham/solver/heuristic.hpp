#pragma once

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "bergeham/solver/exact_search.hpp"
#include "bergeham/solver/rotation.hpp"

namespace bergeham {

namespace detail {

class RotationExtension {
 public:
  RotationExtension(const Hypergraph& h, const SearchBudget& budget)
      : h_(h),
        budget_(budget),
        rng_(budget.seed),
        deadline_(std::chrono::steady_clock::now() +
                  std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                      std::chrono::duration<double>(budget.time_limit_seconds))) {}

  std::optional<BergeCycle> run() {
    const std::size_t n = h_.vertex_count();
    const std::size_t attempts = 4 * n;
    for (std::size_t a = 0; a < attempts && !exhausted(); ++a) {
      auto path = grow(static_cast<VertexId>(rng_() % n));
      if (!path) continue;
      if (auto c = close(*path)) return c;
      std::reverse(path->vertices.begin(), path->vertices.end());
      std::reverse(path->edges.begin(), path->edges.end());
      if (auto c = close(*path)) return c;
    }
    return std::nullopt;
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  bool exhausted() {
    if (nodes_ >= budget_.max_nodes) return true;
    return std::chrono::steady_clock::now() > deadline_;
  }

  std::vector<bool> used_edges(const BergePath& p) const { return rotation::path_edge_mask(h_, p); }

  VertexSet on_path(const BergePath& p) const { return VertexSet::from_range(p.vertices); }

  // Prepends an unvisited vertex to the start through an unused edge.
  bool extend_start(BergePath& p) const {
    const auto used = used_edges(p);
    const VertexSet outside = h_.vertices() - on_path(p);
    std::optional<std::pair<VertexId, EdgeId>> best;
    for (auto e : h_.incident_edges(p.start())) {
      if (used[e]) continue;
      for (auto u : h_.edge(e) & outside)
        if (!best || h_.degree(u) < h_.degree(best->first)) best = {{u, e}};
    }
    if (!best) return false;
    p.vertices.insert(p.vertices.begin(), best->first);
    p.edges.insert(p.edges.begin(), best->second);
    return true;
  }

  static void reverse(BergePath& p) {
    std::reverse(p.vertices.begin(), p.vertices.end());
    std::reverse(p.edges.begin(), p.edges.end());
  }

  // Looks among rotations of p (fixed end) for one whose start can grow.
  bool rotate_to_extend(BergePath& p) {
    std::set<BergePath> seen{p};
    std::vector<BergePath> frontier{p};
    constexpr std::size_t kCap = 256;
    while (!frontier.empty() && seen.size() < kCap) {
      std::vector<BergePath> next;
      for (const auto& q : frontier) {
        bool done = false;
        rotation::for_each_rotation(h_, q, [&](BergePath r) {
          if (done || !seen.insert(r).second) return;
          ++nodes_;
          BergePath trial = r;
          if (extend_start(trial)) {
            p = std::move(trial);
            done = true;
            return;
          }
          next.push_back(std::move(r));
        });
        if (done) return true;
      }
      frontier = std::move(next);
    }
    return false;
  }

  // Closes p into a cycle and reopens it at a vertex with an unused edge
  // leaving the current vertex set.
  bool reopen_cycle(BergePath& p) {
    const auto used = used_edges(p);
    std::optional<EdgeId> closing;
    for (auto e : h_.incident_edges(p.start()))
      if (!used[e] && h_.edge(e).contains(p.finish())) {
        closing = e;
        break;
      }
    if (!closing) return false;
    const VertexSet outside = h_.vertices() - on_path(p);
    const std::size_t t = p.vertices.size();
    for (std::size_t j = 0; j < t; ++j) {
      for (auto e : h_.incident_edges(p.vertices[j])) {
        if (used[e] || e == *closing || !(h_.edge(e).intersects(outside))) continue;
        const VertexId u = (h_.edge(e) & outside).front();
        // Cycle c_0..c_{t-1} with edges p.edges and the closing edge; open it
        // just before c_j and hang u in front.
        std::vector<EdgeId> ring = p.edges;
        ring.push_back(*closing);
        BergePath out;
        out.vertices.push_back(u);
        out.edges.push_back(e);
        for (std::size_t k = 0; k < t; ++k) {
          out.vertices.push_back(p.vertices[(j + k) % t]);
          if (k + 1 < t) out.edges.push_back(ring[(j + k) % t]);
        }
        p = std::move(out);
        return true;
      }
    }
    return false;
  }

  std::optional<BergePath> grow(VertexId start) {
    BergePath p{{start}, {}};
    const std::size_t n = h_.vertex_count();
    while (p.vertices.size() < n && !exhausted()) {
      ++nodes_;
      if (extend_start(p)) continue;
      reverse(p);
      if (extend_start(p)) continue;
      if (p.vertices.size() >= 2 && rotate_to_extend(p)) continue;
      reverse(p);
      if (p.vertices.size() >= 2 && rotate_to_extend(p)) continue;
      if (p.vertices.size() >= 2 && reopen_cycle(p)) continue;
      return std::nullopt;
    }
    if (p.vertices.size() < n) return std::nullopt;
    return p;
  }

  std::optional<BergeCycle> close(const BergePath& p) {
    ClosureOptions options;
    options.max_paths = 512;
    const auto state = rotation_closure(h_, p, options);
    nodes_ += state.witnesses.size();
    for (const auto& [start, w] : state.witnesses) {
      const auto used = used_edges(w);
      for (auto e : h_.incident_edges(start))
        if (!used[e] && h_.edge(e).contains(w.finish())) {
          BergeCycle c{w.vertices, w.edges};
          c.edges.push_back(e);
          return c;
        }
    }
    return std::nullopt;
  }

  const Hypergraph& h_;
  SearchBudget budget_;
  std::mt19937_64 rng_;
  std::chrono::steady_clock::time_point deadline_;
  std::uint64_t nodes_ = 0;
};

}  // namespace detail

// Rotation-extension heuristic: grow a path, rotate to expose extendable
// starts, then close through rotation-reachable endpoints. Never reports
// non-existence; the result is either `cycle` or `unknown`.
inline SearchResult extend_and_close(const Hypergraph& h, const SearchBudget& budget = {}) {
  budget.validate();
  SearchResult result;
  result.status = SearchStatus::unknown;
  if (h.vertex_count() < 3 || h.edge_count() == 0) return result;
  detail::RotationExtension engine(h, budget);
  if (auto c = engine.run()) {
    result.status = SearchStatus::cycle;
    result.cycle = std::move(c);
  }
  result.nodes = engine.nodes();
  return result;
}

}  // namespace bergeham
