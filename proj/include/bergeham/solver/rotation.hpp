#pragma once

#include <algorithm>
#include <cstddef>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "bergeham/core/berge.hpp"
#include "bergeham/core/hypergraph.hpp"

namespace bergeham {

// Path surgeries that keep the last vertex fixed and move the start. Positions
// are 1-based: the path is u_1, f_1, u_2, ..., f_{t}, u_{t+1}.
namespace rotation {

inline bool uses_edge(const BergePath& p, EdgeId e) {
  return std::find(p.edges.begin(), p.edges.end(), e) != p.edges.end();
}

inline void require_index(const BergePath& p, std::size_t i, const char* what) {
  if (i < 1 || i > p.length())
    throw RotationInapplicable(std::string(what) + ": position " + std::to_string(i) + " outside 1.." +
                               std::to_string(p.length()));
}

// Reverses u_1..u_i and reconnects u_1 to u_{i+1} through `bridge`:
//   u_i, f_{i-1}, ..., u_1, bridge, u_{i+1}, f_{i+1}, ...
inline BergePath reverse_prefix(const BergePath& p, std::size_t i, EdgeId bridge) {
  BergePath out;
  out.vertices.reserve(p.vertices.size());
  out.edges.reserve(p.edges.size());
  for (std::size_t k = i; k >= 1; --k) out.vertices.push_back(p.at(k));
  for (std::size_t k = i - 1; k >= 1; --k) out.edges.push_back(p.edge_at(k));
  out.edges.push_back(bridge);
  for (std::size_t k = i + 1; k <= p.vertices.size(); ++k) out.vertices.push_back(p.at(k));
  for (std::size_t k = i + 1; k <= p.length(); ++k) out.edges.push_back(p.edge_at(k));
  return out;
}

// Permutation through the defining edge f_i, which must contain u_1.
inline BergePath defining(const Hypergraph& h, const BergePath& p, std::size_t i) {
  require_index(p, i, "defining rotation");
  if (!h.edge(p.edge_at(i)).contains(p.start()))
    throw RotationInapplicable("defining rotation: start vertex not in f_" + std::to_string(i));
  return reverse_prefix(p, i, p.edge_at(i));
}

// Permutation through a non-defining edge f containing u_1 and u_{i+1}.
inline BergePath nondefining(const Hypergraph& h, const BergePath& p, std::size_t i, EdgeId f) {
  require_index(p, i, "non-defining rotation");
  if (f >= h.edge_count()) throw RotationInapplicable("non-defining rotation: edge id out of range");
  if (uses_edge(p, f)) throw RotationInapplicable("non-defining rotation: edge is already on the path");
  const VertexSet e = h.edge(f);
  if (!e.contains(p.start()) || !e.contains(p.at(i + 1)))
    throw RotationInapplicable("non-defining rotation: edge misses u_1 or u_" + std::to_string(i + 1));
  return reverse_prefix(p, i, f);
}

// Permutation through the defining f_i (containing u_1) and a non-defining f
// containing u_j and u_{i+1}, j < i:
//   u_{j+1}, f_{j+1}, ..., u_i, f_i, u_1, f_1, ..., u_j, f, u_{i+1}, f_{i+1}, ...
inline BergePath combined(const Hypergraph& h, const BergePath& p, std::size_t i, std::size_t j, EdgeId f) {
  require_index(p, i, "combined rotation");
  if (j < 1 || j >= i) throw RotationInapplicable("combined rotation: needs 1 <= j < i");
  if (f >= h.edge_count()) throw RotationInapplicable("combined rotation: edge id out of range");
  if (!h.edge(p.edge_at(i)).contains(p.start()))
    throw RotationInapplicable("combined rotation: start vertex not in f_" + std::to_string(i));
  if (uses_edge(p, f)) throw RotationInapplicable("combined rotation: edge is already on the path");
  const VertexSet e = h.edge(f);
  if (!e.contains(p.at(j)) || !e.contains(p.at(i + 1)))
    throw RotationInapplicable("combined rotation: edge misses u_j or u_{i+1}");

  BergePath out;
  for (std::size_t k = j + 1; k <= i; ++k) out.vertices.push_back(p.at(k));
  for (std::size_t k = 1; k <= j; ++k) out.vertices.push_back(p.at(k));
  for (std::size_t k = i + 1; k <= p.vertices.size(); ++k) out.vertices.push_back(p.at(k));
  for (std::size_t k = j + 1; k <= i - 1; ++k) out.edges.push_back(p.edge_at(k));
  out.edges.push_back(p.edge_at(i));
  for (std::size_t k = 1; k <= j - 1; ++k) out.edges.push_back(p.edge_at(k));
  out.edges.push_back(f);
  for (std::size_t k = i + 1; k <= p.length(); ++k) out.edges.push_back(p.edge_at(k));
  return out;
}

inline std::vector<bool> path_edge_mask(const Hypergraph& h, const BergePath& p) {
  std::vector<bool> on(h.edge_count(), false);
  for (auto e : p.edges) on[e] = true;
  return on;
}

// Every single rotation applicable to p, in a fixed order: defining by i, then
// non-defining by (i, f), then combined by (i, j, f).
template <class Fn>
void for_each_rotation(const Hypergraph& h, const BergePath& p, Fn&& fn, bool include_combined = true) {
  const std::size_t t = p.length();
  if (t == 0) return;
  const VertexId u1 = p.start();
  const auto on_path = path_edge_mask(h, p);
  for (std::size_t i = 1; i <= t; ++i)
    if (h.edge(p.edge_at(i)).contains(u1)) fn(reverse_prefix(p, i, p.edge_at(i)));
  for (auto f : h.incident_edges(u1)) {
    if (on_path[f]) continue;
    const VertexSet e = h.edge(f);
    for (std::size_t i = 1; i <= t; ++i)
      if (e.contains(p.at(i + 1))) fn(reverse_prefix(p, i, f));
  }
  if (!include_combined) return;
  for (std::size_t i = 2; i <= t; ++i) {
    if (!h.edge(p.edge_at(i)).contains(u1)) continue;
    for (auto f : h.incident_edges(p.at(i + 1))) {
      if (on_path[f]) continue;
      const VertexSet e = h.edge(f);
      for (std::size_t j = 1; j < i; ++j)
        if (e.contains(p.at(j))) fn(combined(h, p, i, j, f));
    }
  }
}

}  // namespace rotation

// A Hamiltonian Berge path ending at `fixed_end`, together with every start
// vertex reached so far by rotations (T1) and a witness path for each.
// prefix_bound is the largest x with v_1..v_x all in the closed neighborhood
// of v_1 through edges off the path; prefix_set holds the positions of
// S1 = {v_1, ..., v_{x-1}}.
struct RotationState {
  BergePath path;
  VertexId fixed_end = 0;
  VertexSet reachable_ends;
  std::map<VertexId, BergePath> witnesses;
  PositionSet prefix_set;
  std::size_t prefix_bound = 1;
};

namespace detail {

inline void compute_prefix(const Hypergraph& h, RotationState& s) {
  const auto on_path = rotation::path_edge_mask(h, s.path);
  VertexSet closed = VertexSet::of({s.path.start()});
  for (auto e : h.incident_edges(s.path.start()))
    if (!on_path[e]) closed |= h.edge(e);
  std::size_t x = 0;
  while (x < s.path.vertices.size() && closed.contains(s.path.at(x + 1))) ++x;
  s.prefix_bound = x;
  s.prefix_set = PositionSet::interval(1, std::max<std::size_t>(x, 2));
}

inline void record(RotationState& s, const BergePath& p) {
  s.reachable_ends.insert(p.start());
  s.witnesses.emplace(p.start(), p);
}

inline RotationState advance(const Hypergraph& h, const RotationState& s, BergePath next) {
  RotationState out = s;
  out.path = std::move(next);
  record(out, out.path);
  compute_prefix(h, out);
  return out;
}

}  // namespace detail

inline RotationState make_rotation_state(const Hypergraph& h, const BergePath& p) {
  if (!is_hamiltonian_path(h, p)) throw PreconditionError("rotation state needs a Hamiltonian Berge path");
  RotationState s;
  s.path = p;
  s.fixed_end = p.finish();
  detail::record(s, p);
  detail::compute_prefix(h, s);
  return s;
}

inline RotationState rotate_defining(const Hypergraph& h, const RotationState& s, std::size_t i) {
  return detail::advance(h, s, rotation::defining(h, s.path, i));
}

inline RotationState rotate_nondefining(const Hypergraph& h, const RotationState& s, std::size_t i, EdgeId f) {
  return detail::advance(h, s, rotation::nondefining(h, s.path, i, f));
}

inline RotationState rotate_double(const Hypergraph& h, const RotationState& s, std::size_t i, std::size_t j, EdgeId f) {
  return detail::advance(h, s, rotation::combined(h, s.path, i, j, f));
}

struct ClosureOptions {
  std::size_t max_paths = 4096;  // cap on distinct paths expanded after the first stage
};

// Rotation-reachable start vertices for the fixed end of p. First the paths
// obtained from p by one non-defining rotation onto each of v_1..v_{x-1}
// (plus p itself) are rotated once more by every defining and non-defining
// rotation; then a breadth-first search over all three rotations continues
// until max_paths distinct paths are expanded or every vertex is reached.
// The result is a sound under-approximation of T1; `path` remains p.
inline RotationState rotation_closure(const Hypergraph& h, const BergePath& p, const ClosureOptions& options = {}) {
  RotationState state = make_rotation_state(h, p);
  const VertexSet everything = h.vertices() - VertexSet::of({state.fixed_end});

  std::vector<BergePath> family{p};
  const auto on_path = rotation::path_edge_mask(h, p);
  for (std::size_t i = 1; i + 1 <= state.prefix_bound; ++i) {
    // Smallest off-path edge holding v_1 and v_{i+1}; it exists by choice of x.
    for (auto f : h.incident_edges(p.start())) {
      if (on_path[f] || !h.edge(f).contains(p.at(i + 1))) continue;
      family.push_back(rotation::reverse_prefix(p, i, f));
      break;
    }
  }

  std::set<BergePath> seen(family.begin(), family.end());
  std::deque<BergePath> queue;
  for (const auto& q : family) {
    detail::record(state, q);
    queue.push_back(q);
    rotation::for_each_rotation(
        h, q,
        [&](BergePath r) {
          detail::record(state, r);
          if (seen.insert(r).second) queue.push_back(std::move(r));
        },
        false);
  }

  std::size_t expanded = 0;
  while (!queue.empty() && expanded < options.max_paths && state.reachable_ends != everything) {
    const BergePath q = std::move(queue.front());
    queue.pop_front();
    ++expanded;
    rotation::for_each_rotation(h, q, [&](BergePath r) {
      detail::record(state, r);
      if (seen.size() < options.max_paths * 8 && seen.insert(r).second) queue.push_back(std::move(r));
    });
  }
  return state;
}

// The containment N_{H1}[S1]^- u {v_y : v_i in h_y, i < x <= y} within T1,
// evaluated for state.path against state.reachable_ends, where
// H1 = (edges off the path) u {h_1, ..., h_{x-1}}.
struct Claim1Check {
  VertexSet required;
  VertexSet missing;
  bool holds() const { return missing.empty(); }
};

inline Claim1Check check_claim1(const Hypergraph& h, const RotationState& s) {
  const BergePath& p = s.path;
  const std::size_t x = s.prefix_bound;
  std::vector<bool> keep(h.edge_count(), true);
  for (std::size_t y = 1; y <= p.length(); ++y)
    if (y >= x) keep[p.edge_at(y)] = false;
  // Only h_1..h_{x-1} remain among the path edges.
  const Hypergraph h1 = h.filter_edges([&](EdgeId e) { return keep[e]; });
  const VertexSet s1 = vertices_at(s.prefix_set, p);
  const PositionSet around = positions_of(closed_neighborhood_set(h1, s1), p);
  VertexSet required = vertices_at(shift_left(around, p), p);
  for (std::size_t y = std::max<std::size_t>(x, 1); y <= p.length(); ++y) {
    const VertexSet e = h.edge(p.edge_at(y));
    for (std::size_t i = 1; i < x; ++i)
      if (e.contains(p.at(i))) {
        required.insert(p.at(y));
        break;
      }
  }
  return {required, required - s.reachable_ends};
}

}  // namespace bergeham
