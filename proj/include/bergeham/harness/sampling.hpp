#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "bergeham/conditions/conditions.hpp"
#include "bergeham/core/hypergraph.hpp"

namespace bergeham {

// splitmix64 finalizer; used to derive independent per-trial seeds.
inline std::uint64_t mix_seed(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t trial_seed(std::uint64_t master, std::uint64_t trial) {
  return mix_seed(master ^ mix_seed(trial));
}

// Uniform double in [0, 1) from the top 53 bits; identical on every platform,
// unlike std::uniform_real_distribution.
inline double unit_interval(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

struct SamplingProfile {
  // Each candidate edge is included independently with this probability.
  double edge_probability = 0.5;
  // Dense floor: while this rejects the degree sequence, add a random absent
  // edge through a lowest-degree vertex. Empty means plain Bernoulli sampling.
  std::function<bool(const DegreeSequence&)> floor_target;
  // Edges forced in before sampling (for perturbing a known hypergraph).
  std::vector<VertexSet> base_edges;
};

// Largest candidate universe the sampler will enumerate.
inline constexpr std::size_t kMaxCandidateEdges = std::size_t{1} << 22;

inline std::vector<VertexSet> candidate_edges(std::size_t n, std::optional<std::size_t> r) {
  std::vector<VertexSet> out;
  const VertexSet all = VertexSet::interval(0, n);
  if (r) {
    if (*r == 0 || *r > n) throw InfeasibleError("edge size r must lie in 1..n");
    if (binomial(n, *r) > kMaxCandidateEdges) throw InfeasibleError("too many candidate edges to sample");
    for_each_subset(all, *r, [&](VertexSet e) { out.push_back(e); });
  } else {
    if (n > 22) throw InfeasibleError("non-uniform sampling enumerates all subsets; needs n <= 22");
    for (std::size_t size = 1; size <= n; ++size) for_each_subset(all, size, [&](VertexSet e) { out.push_back(e); });
  }
  return out;
}

// Deterministic in (n, r, profile, seed); r-uniform when r is given, otherwise
// any nonempty subsets. Throws InfeasibleError when the dense floor cannot be
// met even by the complete hypergraph.
inline Hypergraph sample_hypergraph(std::size_t n, std::optional<std::size_t> r, const SamplingProfile& profile,
                                    std::uint64_t seed) {
  if (n > kMaxVertices) throw PreconditionError("sampling needs n <= 63");
  if (!(profile.edge_probability >= 0.0 && profile.edge_probability <= 1.0))
    throw PreconditionError("edge probability must lie in [0, 1]");
  std::mt19937_64 rng(seed);
  const auto universe = candidate_edges(n, r);
  std::vector<bool> chosen(universe.size(), false);
  for (std::size_t c = 0; c < universe.size(); ++c) {
    const bool base =
        std::find(profile.base_edges.begin(), profile.base_edges.end(), universe[c]) != profile.base_edges.end();
    // Draw for every candidate so the stream does not depend on the base.
    const bool drawn = unit_interval(rng) < profile.edge_probability;
    chosen[c] = base || drawn;
  }

  std::vector<std::uint64_t> degree(n, 0);
  for (std::size_t c = 0; c < universe.size(); ++c)
    if (chosen[c])
      for (auto v : universe[c]) ++degree[v];

  auto sequence = [&] {
    std::vector<std::uint64_t> d = degree;
    std::sort(d.begin(), d.end());
    return DegreeSequence::given(std::move(d));
  };

  if (profile.floor_target) {
    while (!profile.floor_target(sequence())) {
      // Lowest-degree vertex that still has an absent edge; ties by smallest id.
      std::optional<VertexId> pick;
      std::vector<std::size_t> options;
      for (VertexId v = 0; v < n; ++v) {
        if (pick && degree[v] >= degree[*pick]) continue;
        std::vector<std::size_t> here;
        for (std::size_t c = 0; c < universe.size(); ++c)
          if (!chosen[c] && universe[c].contains(v)) here.push_back(c);
        if (here.empty()) continue;
        pick = v;
        options = std::move(here);
      }
      if (!pick) throw InfeasibleError("sampling profile cannot reach its degree floor");
      const std::size_t c = options[rng() % options.size()];
      chosen[c] = true;
      for (auto v : universe[c]) ++degree[v];
    }
  }

  std::vector<VertexSet> edges;
  for (std::size_t c = 0; c < universe.size(); ++c)
    if (chosen[c]) edges.push_back(universe[c]);
  return Hypergraph(n, std::move(edges));
}

}  // namespace bergeham
