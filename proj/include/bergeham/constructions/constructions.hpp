#pragma once

#include <algorithm>
#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "bergeham/conditions/conditions.hpp"
#include "bergeham/core/hypergraph.hpp"

namespace bergeham {

// The three sharpness families for the r-uniform conditions.
//   h1: a k-set V1 that lies in only k edges            (breaks condition (1) at i=k)
//   h2: k pairwise non-adjacent vertices seeing only k  (breaks condition (2) at i=k)
//   h3: n/2+1 vertices, only one edge meets two of them (breaks condition (3))
enum class Family { h1, h2, h3 };

inline const char* family_name(Family f) {
  switch (f) {
    case Family::h1: return "h1";
    case Family::h2: return "h2";
    case Family::h3: return "h3";
  }
  return "?";
}

// The condition each family is built to violate, and nothing else.
inline ConditionTag designated_condition(Family f) {
  switch (f) {
    case Family::h1: return ConditionTag::uniform_small;
    case Family::h2: return ConditionTag::uniform_binomial;
    case Family::h3: return ConditionTag::uniform_even;
  }
  return ConditionTag::uniform_small;
}

struct ConstructionSpec {
  Family family = Family::h1;
  std::size_t n = 0;
  std::size_t r = 0;
  std::optional<std::size_t> k;
  std::vector<VertexSet> parts;              // V1, V2 (, V3 for h2); contiguous ranges
  std::optional<VertexSet> special_edge;     // h' for h3
  std::vector<VertexSet> special_supersets;  // the k edges containing V1 for h1
};

struct Construction {
  Hypergraph hypergraph;
  ConstructionSpec spec;
};

namespace detail {

inline void require(bool ok, const std::string& message) {
  if (!ok) throw PreconditionError(message);
}

inline std::string params(std::size_t n, std::size_t r, std::optional<std::size_t> k = std::nullopt) {
  std::string s = "n=" + std::to_string(n) + ", r=" + std::to_string(r);
  if (k) s += ", k=" + std::to_string(*k);
  return s;
}

}  // namespace detail

// Validates parameters and fixes the partition (and h1's special edges / h3's
// h') without enumerating the bulk edge families.
inline ConstructionSpec construction_spec(Family family, std::size_t n, std::size_t r,
                                          std::optional<std::size_t> k = std::nullopt) {
  detail::require(n <= kMaxVertices, "n exceeds " + std::to_string(kMaxVertices));
  ConstructionSpec spec{family, n, r, k, {}, {}, {}};
  switch (family) {
    case Family::h1: {
      detail::require(k.has_value(), "h1 needs k");
      detail::require(*k > 0 && 2 * *k < 2 * r && 2 * r < n, "h1 needs n > 2r > 2k > 0, got " + detail::params(n, r, k));
      const VertexSet v1 = VertexSet::interval(0, *k);
      const VertexSet v2 = VertexSet::interval(*k, n);
      spec.parts = {v1, v2};
      // The k edges containing V1 are V1 u S for the colex-first (r-k)-subsets S of V2.
      if (binomial(n - *k, r - *k) < *k)
        throw InfeasibleError("h1 needs k <= C(n-k, r-k) distinct supersets of V1, got " + detail::params(n, r, k));
      for_each_subset(v2, r - *k, [&](VertexSet s) {
        if (spec.special_supersets.size() < *k) spec.special_supersets.push_back(v1 | s);
      });
      break;
    }
    case Family::h2:
      detail::require(k.has_value(), "h2 needs k");
      detail::require(3 <= r && r <= *k && 2 * *k < n, "h2 needs 3 <= r <= k < n/2, got " + detail::params(n, r, k));
      spec.parts = {VertexSet::interval(0, *k), VertexSet::interval(*k, 2 * *k), VertexSet::interval(2 * *k, n)};
      break;
    case Family::h3:
      detail::require(n % 2 == 0 && 3 <= r && 2 * r < n, "h3 needs n even and 3 <= r < n/2, got " + detail::params(n, r));
      spec.k.reset();
      spec.parts = {VertexSet::interval(0, n / 2 + 1), VertexSet::interval(n / 2 + 1, n)};
      spec.special_edge = VertexSet::interval(0, r);
      break;
  }
  return spec;
}

inline Hypergraph build_construction(const ConstructionSpec& spec) {
  std::vector<VertexSet> edges;
  const std::size_t r = spec.r;
  switch (spec.family) {
    case Family::h1: {
      for_each_subset(spec.parts[1], r, [&](VertexSet e) { edges.push_back(e); });
      edges.insert(edges.end(), spec.special_supersets.begin(), spec.special_supersets.end());
      break;
    }
    case Family::h2: {
      const VertexSet v1 = spec.parts[0], v2 = spec.parts[1], v3 = spec.parts[2];
      for (auto v : v1)
        for_each_subset(v2, r - 1, [&](VertexSet s) {
          s.insert(v);
          edges.push_back(s);
        });
      for_each_subset(v2 | v3, r, [&](VertexSet e) { edges.push_back(e); });
      break;
    }
    case Family::h3: {
      const VertexSet v1 = spec.parts[0], v2 = spec.parts[1];
      for_each_subset(v2, r, [&](VertexSet e) { edges.push_back(e); });
      for (auto v : v1)
        for_each_subset(v2, r - 1, [&](VertexSet s) {
          s.insert(v);
          edges.push_back(s);
        });
      edges.push_back(*spec.special_edge);
      break;
    }
  }
  return Hypergraph(spec.n, std::move(edges));
}

inline Construction example1(std::size_t n, std::size_t r, std::size_t k) {
  auto spec = construction_spec(Family::h1, n, r, k);
  auto h = build_construction(spec);
  return {std::move(h), std::move(spec)};
}

inline Construction example2(std::size_t n, std::size_t r, std::size_t k) {
  auto spec = construction_spec(Family::h2, n, r, k);
  auto h = build_construction(spec);
  return {std::move(h), std::move(spec)};
}

inline Construction example3(std::size_t n, std::size_t r) {
  auto spec = construction_spec(Family::h3, n, r);
  auto h = build_construction(spec);
  return {std::move(h), std::move(spec)};
}

inline Construction generate(Family family, std::size_t n, std::size_t r, std::optional<std::size_t> k = std::nullopt) {
  auto spec = construction_spec(family, n, r, k);
  auto h = build_construction(spec);
  return {std::move(h), std::move(spec)};
}

namespace detail {

inline std::uint64_t to_u64(const BigInt& value) {
  if (value > BigInt(std::numeric_limits<std::uint64_t>::max()))
    throw InfeasibleError("predicted degree exceeds 64 bits");
  return value.convert_to<std::uint64_t>();
}

}  // namespace detail

// Closed-form degree sequence of a construction. For h1 the V2 side is not
// pinned by a formula alone: each V2 vertex has C(n-k-1, r-1) from the
// complete part plus one for every chosen superset of V1 containing it.
inline DegreeSequence predicted_degree_sequence(const ConstructionSpec& spec) {
  const std::size_t n = spec.n, r = spec.r;
  std::vector<std::uint64_t> d;
  d.reserve(n);
  switch (spec.family) {
    case Family::h1: {
      const std::size_t k = *spec.k;
      d.assign(k, k);
      const auto base = detail::to_u64(binomial(n - k - 1, r - 1));
      for (auto v : spec.parts[1]) {
        std::uint64_t extra = 0;
        for (const auto& e : spec.special_supersets) extra += e.contains(v) ? 1 : 0;
        d.push_back(base + extra);
      }
      break;
    }
    case Family::h2: {
      const std::size_t k = *spec.k;
      d.insert(d.end(), k, detail::to_u64(binomial(k, r - 1)));
      const auto middle = binomial(n - k - 1, r - 1);
      d.insert(d.end(), n - 2 * k, detail::to_u64(middle));
      d.insert(d.end(), k, detail::to_u64(middle + BigInt(k) * binomial(k - 1, r - 2)));
      break;
    }
    case Family::h3: {
      const std::size_t half = n / 2;
      const auto low = binomial(half - 1, r - 1);
      d.insert(d.end(), half + 1 - r, detail::to_u64(low));
      d.insert(d.end(), r, detail::to_u64(low + 1));
      d.insert(d.end(), half - 1,
               detail::to_u64(binomial(half - 2, r - 1) + BigInt(half + 1) * binomial(half - 2, r - 2)));
      break;
    }
  }
  std::sort(d.begin(), d.end());
  return DegreeSequence::given(std::move(d));
}

struct FamilyParameters {
  Family family;
  std::size_t n;
  std::size_t r;
  std::optional<std::size_t> k;
};

// Every parameter point of `family` with 2r < n <= max_n and r >= 3 (the range
// where the r-uniform checker applies).
inline std::vector<FamilyParameters> parameter_grid(Family family, std::size_t max_n, std::size_t min_n = 3) {
  std::vector<FamilyParameters> out;
  for (std::size_t n = min_n; n <= max_n; ++n)
    for (std::size_t r = 3; 2 * r < n; ++r) {
      switch (family) {
        case Family::h1:
          for (std::size_t k = 1; k < r; ++k)
            if (binomial(n - k, r - k) >= k) out.push_back({family, n, r, k});
          break;
        case Family::h2:
          for (std::size_t k = r; 2 * k < n; ++k) out.push_back({family, n, r, k});
          break;
        case Family::h3:
          if (n % 2 == 0) out.push_back({family, n, r, std::nullopt});
          break;
      }
    }
  return out;
}

}  // namespace bergeham
