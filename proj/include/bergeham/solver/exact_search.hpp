#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <mutex>
#include <optional>
#include <span>
#include <thread>
#include <vector>

#include "bergeham/core/berge.hpp"
#include "bergeham/core/hypergraph.hpp"

namespace bergeham {

struct SearchBudget {
  std::uint64_t max_nodes = 200'000'000;
  double time_limit_seconds = 600.0;
  std::uint64_t seed = 0;
  unsigned threads = 1;

  void validate() const {
    if (max_nodes == 0 || !(time_limit_seconds > 0) || threads == 0)
      throw PreconditionError("search budget limits must be positive");
  }
};

enum class SearchStatus { cycle, none_exists, unknown };

inline const char* status_name(SearchStatus s) {
  switch (s) {
    case SearchStatus::cycle: return "cycle";
    case SearchStatus::none_exists: return "none";
    case SearchStatus::unknown: return "unknown";
  }
  return "?";
}

struct SearchResult {
  SearchStatus status = SearchStatus::unknown;
  std::optional<BergeCycle> cycle;
  std::uint64_t nodes = 0;
};

namespace detail {

// Hamiltonicity of the 2-section graph by subset DP; a Berge cycle projects to
// a cycle there, so a negative answer settles the hypergraph.
inline bool two_section_hamiltonian(const Hypergraph& h) {
  const std::size_t n = h.vertex_count();
  const std::size_t states = std::size_t{1} << (n - 1);
  // Vertex n-1 is the fixed start; masks range over the other n-1 vertices.
  std::vector<std::uint64_t> ends(states, 0);
  const VertexSet start_adj = h.neighborhood(n - 1);
  for (auto v : start_adj) ends[std::size_t{1} << v] |= std::uint64_t{1} << v;
  for (std::size_t mask = 1; mask < states; ++mask) {
    const std::uint64_t e = ends[mask];
    if (e == 0) continue;
    for (VertexSet rest(e); auto v : rest) {
      const std::uint64_t next = h.neighborhood(v).bits() & ~mask & (states - 1);
      for (VertexSet add(next); auto u : add) ends[mask | (std::size_t{1} << u)] |= std::uint64_t{1} << u;
    }
  }
  return (ends[states - 1] & start_adj.bits()) != 0;
}

// Depth-first search over vertex orders starting at a fixed vertex. The edges
// are assigned lazily: consecutive pairs are kept matched to distinct edges by
// augmenting paths, so a vertex order survives exactly when its pairs still
// have a system of distinct representatives.
class CycleSearch {
 public:
  CycleSearch(const Hypergraph& h, VertexId start, std::atomic<std::uint64_t>& nodes, std::uint64_t max_nodes,
              std::chrono::steady_clock::time_point deadline)
      : h_(h),
        n_(h.vertex_count()),
        m_(h.edge_count()),
        start_(start),
        nodes_(nodes),
        max_nodes_(max_nodes),
        deadline_(deadline) {
    pair_edges_.assign(n_ * n_, {});
    for (EdgeId e = 0; e < m_; ++e)
      for (auto a : h.edge(e))
        for (auto b : h.edge(e))
          if (a != b) pair_edges_[a * n_ + b].push_back(e);
    order_.resize(n_);
    for (VertexId v = 0; v < n_; ++v) order_[v] = v;
    std::stable_sort(order_.begin(), order_.end(),
                     [&](VertexId a, VertexId b) { return h.degree(a) < h.degree(b); });
    path_.assign(n_, 0);
    // Demands: n cycle pairs, then up to n relaxed lookahead demands.
    demand_.assign(2 * n_ + 1, {});
    match_.assign(2 * n_ + 1, kNone);
    owner_.assign(m_, kNone);
    stamp_.assign(m_, 0);
  }

  // Explores orders beginning start, second; returns true with a cycle, false
  // when exhausted or stopped (check stopped()).
  // `best` holds the lowest branch index that already succeeded; this branch
  // (number `task`) gives up once a lower one has.
  bool run(VertexId second, const std::atomic<std::size_t>* best, std::size_t task) {
    best_ = best;
    task_ = task;
    path_[0] = start_;
    visited_ = VertexSet::of({start_});
    if (!extend_to(0, second)) return false;
    const bool found = feasible(1) && dfs(1);
    return found;
  }

  bool stopped() const { return stopped_; }
  BergeCycle cycle() const {
    BergeCycle c;
    c.vertices = path_;
    for (std::size_t p = 0; p < n_; ++p) c.edges.push_back(match_[p]);
    return c;
  }

 private:
  static constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

  std::span<const EdgeId> pair(VertexId a, VertexId b) const { return pair_edges_[a * n_ + b]; }

  bool augment(std::size_t d) {
    ++epoch_;
    return try_demand(d);
  }

  bool try_demand(std::size_t d) {
    for (auto e : demand_[d]) {
      if (stamp_[e] == epoch_) continue;
      stamp_[e] = epoch_;
      if (owner_[e] == kNone || try_demand(owner_[e])) {
        owner_[e] = d;
        match_[d] = e;
        return true;
      }
    }
    return false;
  }

  void release(std::size_t d) {
    owner_[match_[d]] = kNone;
    match_[d] = kNone;
  }

  // Appends vertex u after path_[depth] and matches the new pair.
  bool extend_to(std::size_t depth, VertexId u) {
    demand_[depth] = pair(path_[depth], u);
    if (!augment(depth)) return false;
    path_[depth + 1] = u;
    visited_.insert(u);
    return true;
  }

  void retract(std::size_t depth) {
    visited_.erase(path_[depth + 1]);
    release(depth);
  }

  bool budget_exhausted() {
    const auto count = nodes_.fetch_add(1, std::memory_order_relaxed) + 1;
    if (count > max_nodes_) return true;
    if ((count & 0x3ff) == 0 && std::chrono::steady_clock::now() > deadline_) return true;
    return best_ && best_->load(std::memory_order_relaxed) < task_;
  }

  // Necessary conditions for completing path_[0..depth] to a Hamiltonian cycle.
  bool feasible(std::size_t depth) {
    const VertexSet unvisited = h_.vertices() - visited_;
    const VertexId last = path_[depth];
    if (unvisited.empty()) return true;
    if (!h_.neighborhood(last).intersects(unvisited)) return false;
    // The closing vertex lies in unvisited, is adjacent to the start, and by
    // reflection symmetry has a larger id than path_[1].
    const VertexSet closers = h_.neighborhood(start_) & unvisited & VertexSet::interval(path_[1] + 1, n_);
    if (closers.empty()) return false;
    const VertexSet reachable = unvisited | VertexSet::of({last, start_});
    for (auto w : unvisited)
      if ((h_.neighborhood(w) & reachable).size() < 2) return false;
    return lookahead(unvisited);
  }

  // Hall check on a relaxation: every remaining pair of the cycle can be
  // charged to its later vertex (an unvisited vertex, or the start for the
  // closing pair), so the matched prefix plus one "some edge containing w"
  // demand per such vertex must have distinct representatives.
  bool lookahead(VertexSet unvisited) {
    saved_owner_ = owner_;
    saved_match_ = match_;
    bool ok = true;
    std::size_t d = n_;
    auto add = [&](VertexId w) {
      demand_[d] = h_.incident_edges(w);
      ok = augment(d);
      ++d;
    };
    add(start_);
    for (auto w : unvisited) {
      if (!ok) break;
      add(w);
    }
    owner_.swap(saved_owner_);
    match_.swap(saved_match_);
    return ok;
  }

  bool dfs(std::size_t depth) {
    if (budget_exhausted()) {
      stopped_ = true;
      return false;
    }
    const VertexId last = path_[depth];
    if (depth == n_ - 1) {
      demand_[depth] = pair(last, start_);
      return augment(depth);
    }
    const VertexSet candidates = h_.neighborhood(last) - visited_;
    for (auto u : order_) {
      if (!candidates.contains(u)) continue;
      if (!extend_to(depth, u)) continue;
      if (feasible(depth + 1) && dfs(depth + 1)) return true;
      retract(depth);
      if (stopped_) return false;
    }
    return false;
  }

  const Hypergraph& h_;
  std::size_t n_;
  std::size_t m_;
  VertexId start_;
  std::atomic<std::uint64_t>& nodes_;
  std::uint64_t max_nodes_;
  std::chrono::steady_clock::time_point deadline_;
  const std::atomic<std::size_t>* best_ = nullptr;
  std::size_t task_ = 0;
  bool stopped_ = false;

  std::vector<std::vector<EdgeId>> pair_edges_;
  std::vector<VertexId> order_;
  std::vector<VertexId> path_;
  VertexSet visited_;
  std::vector<std::span<const EdgeId>> demand_;
  std::vector<std::size_t> match_;
  std::vector<std::size_t> owner_;
  std::vector<std::size_t> saved_match_;
  std::vector<std::size_t> saved_owner_;
  std::vector<std::uint64_t> stamp_;
  std::uint64_t epoch_ = 0;
};

}  // namespace detail

// Exact decision of Berge-Hamiltonicity. `cycle` carries a verified
// certificate; `none_exists` means the whole search tree was exhausted;
// `unknown` means the budget ran out first. With several threads the
// top-level branches are shared out, and the certificate of the
// lowest-numbered successful branch is returned, so the answer does not depend
// on scheduling unless the budget is exhausted.
inline SearchResult find_hamiltonian_berge_cycle(const Hypergraph& h, const SearchBudget& budget = {}) {
  budget.validate();
  const std::size_t n = h.vertex_count();
  if (n < 3) throw PreconditionError("Hamiltonian search needs n >= 3, got n=" + std::to_string(n));

  SearchResult result;
  result.status = SearchStatus::none_exists;
  if (h.edge_count() < n) return result;
  for (VertexId v = 0; v < n; ++v)
    if (h.degree(v) < 2) return result;
  if (n <= 16 && !detail::two_section_hamiltonian(h)) return result;

  VertexId start = 0;
  for (VertexId v = 1; v < n; ++v)
    if (h.degree(v) < h.degree(start)) start = v;
  const auto seconds = std::chrono::duration<double>(budget.time_limit_seconds);
  const auto deadline = std::chrono::steady_clock::now() +
                        std::chrono::duration_cast<std::chrono::steady_clock::duration>(seconds);

  // Top-level branches: the second vertex of the cycle, in fail-first order.
  std::vector<VertexId> seconds_order;
  {
    std::vector<VertexId> all(n);
    for (VertexId v = 0; v < n; ++v) all[v] = v;
    std::stable_sort(all.begin(), all.end(), [&](VertexId a, VertexId b) { return h.degree(a) < h.degree(b); });
    for (auto v : all)
      if (h.neighborhood(start).contains(v)) seconds_order.push_back(v);
  }

  std::atomic<std::uint64_t> nodes{0};
  std::atomic<std::size_t> best{std::numeric_limits<std::size_t>::max()};
  std::atomic<std::size_t> next_task{0};
  std::atomic<bool> any_stopped{false};
  std::mutex mutex;
  std::vector<std::optional<BergeCycle>> found(seconds_order.size());

  auto worker = [&] {
    detail::CycleSearch search(h, start, nodes, budget.max_nodes, deadline);
    while (true) {
      const std::size_t task = next_task.fetch_add(1);
      if (task >= seconds_order.size() || task > best.load()) return;
      detail::CycleSearch local = search;
      if (local.run(seconds_order[task], &best, task)) {
        std::lock_guard lock(mutex);
        found[task] = local.cycle();
        std::size_t current = best.load();
        while (task < current && !best.compare_exchange_weak(current, task)) {
        }
      } else if (local.stopped()) {
        any_stopped = true;
      }
    }
  };

  const unsigned threads = std::min<unsigned>(budget.threads, static_cast<unsigned>(std::max<std::size_t>(1, seconds_order.size())));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  result.nodes = nodes.load();
  for (auto& c : found)
    if (c) {
      result.status = SearchStatus::cycle;
      result.cycle = std::move(c);
      return result;
    }
  result.status = any_stopped ? SearchStatus::unknown : SearchStatus::none_exists;
  return result;
}

// Independent oracle for small n: every cyclic order of the vertices (vertex 0
// fixed first) is tested for distinct representative edges of its consecutive
// pairs by plain exhaustive assignment.
inline bool is_hamiltonian_bruteforce(const Hypergraph& h) {
  const std::size_t n = h.vertex_count();
  if (n > 8) throw PreconditionError("brute-force oracle is limited to n <= 8, got n=" + std::to_string(n));
  if (n < 2) return false;
  std::vector<VertexId> order(n);
  for (VertexId v = 0; v < n; ++v) order[v] = v;
  std::vector<bool> used(h.edge_count(), false);

  auto assign = [&](auto&& self, std::size_t pair) -> bool {
    if (pair == n) return true;
    const VertexId a = order[pair], b = order[(pair + 1) % n];
    for (EdgeId e = 0; e < h.edge_count(); ++e) {
      if (used[e] || !h.edge(e).contains(a) || !h.edge(e).contains(b)) continue;
      used[e] = true;
      const bool ok = self(self, pair + 1);
      used[e] = false;
      if (ok) return true;
    }
    return false;
  };

  do {
    if (assign(assign, 0)) return true;
  } while (std::next_permutation(order.begin() + 1, order.end()));
  return false;
}

}  // namespace bergeham
