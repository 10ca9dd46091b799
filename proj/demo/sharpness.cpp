// Prints every sharpness construction up to n = 10 with its degree sequence,
// the condition it breaks, and what the exact search says about it.
#include <cstdio>

#include "bergeham/conditions/conditions.hpp"
#include "bergeham/constructions/constructions.hpp"
#include "bergeham/solver/exact_search.hpp"

using namespace bergeham;

int main() {
  for (auto family : {Family::h1, Family::h2, Family::h3}) {
    for (const auto& p : parameter_grid(family, 10)) {
      const auto c = generate(p.family, p.n, p.r, p.k);
      const auto d = degree_sequence(c.hypergraph);
      const auto report = posa_r_uniform(d, p.r);
      const auto result = find_hamiltonian_berge_cycle(c.hypergraph);

      std::printf("%s n=%zu r=%zu", family_name(p.family), p.n, p.r);
      if (p.k) std::printf(" k=%zu", *p.k);
      std::printf("  m=%zu  d =", c.hypergraph.edge_count());
      for (auto x : d.values()) std::printf(" %llu", static_cast<unsigned long long>(x));
      std::printf("  breaks");
      for (auto tag : report.violated_tags()) std::printf(" %s", tag_label(tag));
      std::printf("  search: %s (%llu nodes)\n", status_name(result.status),
                  static_cast<unsigned long long>(result.nodes));
    }
  }
}
