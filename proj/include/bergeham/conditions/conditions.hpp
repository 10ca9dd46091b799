#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "bergeham/core/hypergraph.hpp"

namespace bergeham {

using BigInt = boost::multiprecision::cpp_int;

// C(a, b), zero when b > a.
inline BigInt binomial(std::size_t a, std::size_t b) {
  if (b > a) return 0;
  b = std::min(b, a - b);
  BigInt out = 1;
  for (std::size_t i = 1; i <= b; ++i) {
    out *= a - b + i;
    out /= i;
  }
  return out;
}

inline BigInt power_of_two(std::size_t exponent) {
  BigInt out = 1;
  out <<= exponent;
  return out;
}

enum class Theorem { posa, chvatal, r_uniform, non_uniform, conjecture };

inline const char* theorem_name(Theorem t) {
  switch (t) {
    case Theorem::posa: return "posa";
    case Theorem::chvatal: return "chvatal";
    case Theorem::r_uniform: return "r-uniform";
    case Theorem::non_uniform: return "non-uniform";
    case Theorem::conjecture: return "conjecture";
  }
  return "?";
}

// One tag per numbered inequality family.
enum class ConditionTag {
  posa_graph,             // d_k > k,  k < n/2
  chvatal_graph,          // d_k <= k  =>  d_{n-k} >= n-k
  uniform_small,          // (1) d_i > i,  1 <= i < r
  uniform_binomial,       // (2) d_i > C(i, r-1),  r <= i <= floor((n-1)/2)
  uniform_even,           // (3) d_{(n-2)/2} > C((n-2)/2, r-1) + 1,  n even
  nonuniform_power,       // (4) d_i > 2^i,  1 <= i <= floor((n-1)/2)
  nonuniform_even,        // (5) d_{(n-2)/2} > 2^{(n-2)/2} + 1,  n even
  conjecture_small,       // d_i > i,  i < r
  conjecture_implication, // d_i <= C(i, r-1)  =>  d_{n-i} > C(n-i-1, r-1)
  conjecture_even,        // d_{(n-2)/2} <= C((n-2)/2, r-1)+1  =>  d_{(n+2)/2} > ...
};

inline const char* tag_label(ConditionTag t) {
  switch (t) {
    case ConditionTag::posa_graph: return "posa";
    case ConditionTag::chvatal_graph: return "chvatal";
    case ConditionTag::uniform_small: return "(1)";
    case ConditionTag::uniform_binomial: return "(2)";
    case ConditionTag::uniform_even: return "(3)";
    case ConditionTag::nonuniform_power: return "(4)";
    case ConditionTag::nonuniform_even: return "(5)";
    case ConditionTag::conjecture_small: return "conjecture-small";
    case ConditionTag::conjecture_implication: return "conjecture-implication";
    case ConditionTag::conjecture_even: return "conjecture-even";
  }
  return "?";
}

// One failed inequality instance: d_position must be `relation` bound, and is `actual`.
struct Violation {
  enum class Relation { greater, at_least };

  ConditionTag tag;
  std::size_t index;     // the quantified i (or k) of the condition
  std::size_t position;  // the sequence entry actually compared
  Relation relation;
  BigInt bound;
  std::uint64_t actual;

  friend bool operator==(const Violation&, const Violation&) = default;
};

struct ConditionReport {
  Theorem theorem = Theorem::posa;
  std::size_t n = 0;
  std::optional<std::size_t> r;  // absent for graph and non-uniform checks
  bool forced = false;           // preconditions on n were overridden
  std::vector<Violation> violations;

  bool satisfied() const { return violations.empty(); }

  std::set<ConditionTag> violated_tags() const {
    std::set<ConditionTag> tags;
    for (const auto& v : violations) tags.insert(v.tag);
    return tags;
  }
};

namespace detail {

inline bool exceeds(std::uint64_t value, const BigInt& bound) { return BigInt(value) > bound; }

inline void require_graph_sequence(const DegreeSequence& d) {
  if (d.size() < 3) throw PreconditionError("graph checks need n >= 3, got n=" + std::to_string(d.size()));
}

inline void require_uniform_sequence(const DegreeSequence& d, std::size_t r) {
  if (r < 3) throw PreconditionError("r-uniform checks need r >= 3, got r=" + std::to_string(r));
  if (d.size() <= 2 * r)
    throw PreconditionError("r-uniform checks need n > 2r, got n=" + std::to_string(d.size()) +
                            ", r=" + std::to_string(r));
}

}  // namespace detail

// Pósa: d_k > k for every 1 <= k < n/2.
inline ConditionReport posa_graph(const DegreeSequence& d) {
  detail::require_graph_sequence(d);
  ConditionReport report{Theorem::posa, d.size(), std::nullopt, false, {}};
  for (std::size_t k = 1; 2 * k < d.size(); ++k)
    if (d.d(k) <= k)
      report.violations.push_back({ConditionTag::posa_graph, k, k, Violation::Relation::greater, BigInt(k), d.d(k)});
  return report;
}

// Chvátal: for every k < n/2, d_k <= k implies d_{n-k} >= n-k.
inline ConditionReport chvatal_graph(const DegreeSequence& d) {
  detail::require_graph_sequence(d);
  const std::size_t n = d.size();
  ConditionReport report{Theorem::chvatal, n, std::nullopt, false, {}};
  for (std::size_t k = 1; 2 * k < n; ++k)
    if (d.d(k) <= k && d.d(n - k) < n - k)
      report.violations.push_back(
          {ConditionTag::chvatal_graph, k, n - k, Violation::Relation::at_least, BigInt(n - k), d.d(n - k)});
  return report;
}

// r-uniform Pósa-type conditions (1)-(3). At the shared index (n-2)/2 of an
// even n, condition (3) strictly strengthens (2); it is listed only when (2)
// holds there, so each failing index is attributed to the weakest bound it
// breaks.
inline ConditionReport posa_r_uniform(const DegreeSequence& d, std::size_t r) {
  detail::require_uniform_sequence(d, r);
  const std::size_t n = d.size();
  ConditionReport report{Theorem::r_uniform, n, r, false, {}};
  for (std::size_t i = 1; i < r; ++i)
    if (d.d(i) <= i)
      report.violations.push_back({ConditionTag::uniform_small, i, i, Violation::Relation::greater, BigInt(i), d.d(i)});

  std::optional<std::size_t> binomial_failed_at;
  for (std::size_t i = r; i <= (n - 1) / 2; ++i) {
    const BigInt bound = binomial(i, r - 1);
    if (!detail::exceeds(d.d(i), bound)) {
      report.violations.push_back({ConditionTag::uniform_binomial, i, i, Violation::Relation::greater, bound, d.d(i)});
      binomial_failed_at = i;
    }
  }
  if (n % 2 == 0) {
    const std::size_t i = (n - 2) / 2;
    const BigInt bound = binomial(i, r - 1) + 1;
    if (!detail::exceeds(d.d(i), bound) && binomial_failed_at != i)
      report.violations.push_back({ConditionTag::uniform_even, i, i, Violation::Relation::greater, bound, d.d(i)});
  }
  return report;
}

// Non-uniform conditions (4)-(5). Needs n > 40 unless `force` is set, in which
// case the report is flagged as forced.
inline ConditionReport posa_nonuniform(const DegreeSequence& d, bool force = false) {
  const std::size_t n = d.size();
  if (n <= 40 && !force)
    throw PreconditionError("non-uniform checks need n > 40 (use force to experiment), got n=" + std::to_string(n));
  if (n < 3) throw PreconditionError("non-uniform checks need n >= 3");
  ConditionReport report{Theorem::non_uniform, n, std::nullopt, n <= 40, {}};

  std::optional<std::size_t> power_failed_at;
  for (std::size_t i = 1; i <= (n - 1) / 2; ++i) {
    const BigInt bound = power_of_two(i);
    if (!detail::exceeds(d.d(i), bound)) {
      report.violations.push_back({ConditionTag::nonuniform_power, i, i, Violation::Relation::greater, bound, d.d(i)});
      power_failed_at = i;
    }
  }
  if (n % 2 == 0) {
    const std::size_t i = (n - 2) / 2;
    const BigInt bound = power_of_two(i) + 1;
    if (!detail::exceeds(d.d(i), bound) && power_failed_at != i)
      report.violations.push_back({ConditionTag::nonuniform_even, i, i, Violation::Relation::greater, bound, d.d(i)});
  }
  return report;
}

// Chvátal-type conjecture for r-uniform sequences.
inline ConditionReport conjecture_r_uniform(const DegreeSequence& d, std::size_t r) {
  detail::require_uniform_sequence(d, r);
  const std::size_t n = d.size();
  ConditionReport report{Theorem::conjecture, n, r, false, {}};
  for (std::size_t i = 1; i < r; ++i)
    if (d.d(i) <= i)
      report.violations.push_back(
          {ConditionTag::conjecture_small, i, i, Violation::Relation::greater, BigInt(i), d.d(i)});

  for (std::size_t i = r; i <= (n - 1) / 2; ++i) {
    if (detail::exceeds(d.d(i), binomial(i, r - 1))) continue;
    const BigInt bound = binomial(n - i - 1, r - 1);
    if (!detail::exceeds(d.d(n - i), bound))
      report.violations.push_back(
          {ConditionTag::conjecture_implication, i, n - i, Violation::Relation::greater, bound, d.d(n - i)});
  }
  if (n % 2 == 0) {
    const std::size_t i = (n - 2) / 2;
    const std::size_t half = n / 2;
    if (!detail::exceeds(d.d(i), binomial(i, r - 1) + 1)) {
      const BigInt bound = binomial(half - 2, r - 1) + BigInt(half + 1) * binomial(half - 2, r - 2);
      const std::size_t position = (n + 2) / 2;
      if (!detail::exceeds(d.d(position), bound))
        report.violations.push_back(
            {ConditionTag::conjecture_even, i, position, Violation::Relation::greater, bound, d.d(position)});
    }
  }
  return report;
}

// Dispatch by theorem; r is ignored by the graph and non-uniform checks.
inline ConditionReport check_sequence(Theorem theorem, const DegreeSequence& d, std::size_t r = 0, bool force = false) {
  switch (theorem) {
    case Theorem::posa: return posa_graph(d);
    case Theorem::chvatal: return chvatal_graph(d);
    case Theorem::r_uniform: return posa_r_uniform(d, r);
    case Theorem::non_uniform: return posa_nonuniform(d, force);
    case Theorem::conjecture: return conjecture_r_uniform(d, r);
  }
  throw PreconditionError("unknown theorem");
}

}  // namespace bergeham
