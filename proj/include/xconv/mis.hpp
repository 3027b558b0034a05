#pragma once

#include "xconv/disks.hpp"
#include "xconv/solve_result.hpp"

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace xconv {

/// Tangency graph of a disk instance (a penny graph): vertices are disks,
/// edges the touching pairs.
struct TangencyGraph {
  std::size_t n = 0;
  std::vector<TangentPair> edges;

  static TangencyGraph from_instance(const DiskInstance& d) {
    return {d.size(), tangent_pairs(d)};
  }

  std::vector<std::uint64_t> adjacency_masks() const {
    if (n > 63) throw std::invalid_argument("TangencyGraph: too many vertices");
    std::vector<std::uint64_t> adj(n, 0);
    for (const TangentPair& e : edges) {
      if (e.i >= e.j || e.j >= n) throw std::invalid_argument("TangencyGraph: bad edge");
      adj[e.i] |= std::uint64_t{1} << e.j;
      adj[e.j] |= std::uint64_t{1} << e.i;
    }
    return adj;
  }
};

namespace detail {

struct MisSearch {
  const std::vector<std::uint64_t>& adj;
  std::size_t best = 0;
  std::uint64_t best_mask = 0;
  std::uint64_t explored = 0;

  void run(std::uint64_t avail, std::uint64_t chosen, std::size_t size) {
    ++explored;
    if (size + static_cast<std::size_t>(std::popcount(avail)) <= best) return;
    if (!avail) {
      best = size;
      best_mask = chosen;
      return;
    }
    // Branch on a maximum-degree available vertex (ties: lowest index).
    int v = -1, vdeg = -1;
    for (std::uint64_t rest = avail; rest;) {
      const int u = std::countr_zero(rest);
      rest &= rest - 1;
      const int deg = std::popcount(adj[static_cast<std::size_t>(u)] & avail);
      if (deg > vdeg) {
        v = u;
        vdeg = deg;
      }
    }
    if (vdeg == 0) {  // remaining vertices are pairwise non-adjacent
      const std::size_t total = size + static_cast<std::size_t>(std::popcount(avail));
      if (total > best) {
        best = total;
        best_mask = chosen | avail;
      }
      return;
    }
    const std::uint64_t vbit = std::uint64_t{1} << v;
    run(avail & ~(adj[static_cast<std::size_t>(v)] | vbit), chosen | vbit, size + 1);
    run(avail & ~vbit, chosen, size);
  }
};

}  // namespace detail

/// Exact maximum independent set by branch and bound: branch on a
/// maximum-degree vertex (exclude it, or include it and delete its closed
/// neighborhood), seeded with a greedy minimum-degree lower bound.
inline SolveResult max_independent_set(const TangencyGraph& g) {
  const auto adj = g.adjacency_masks();
  const std::uint64_t all =
      g.n == 0 ? 0 : (g.n == 63 ? ~std::uint64_t{0} : (std::uint64_t{1} << g.n) - 1);

  std::uint64_t greedy_mask = 0;
  std::size_t greedy_size = 0;
  for (std::uint64_t avail = all; avail;) {
    int v = -1, vdeg = 64;
    for (std::uint64_t rest = avail; rest;) {
      const int u = std::countr_zero(rest);
      rest &= rest - 1;
      const int deg = std::popcount(adj[static_cast<std::size_t>(u)] & avail);
      if (deg < vdeg) {
        v = u;
        vdeg = deg;
      }
    }
    greedy_mask |= std::uint64_t{1} << v;
    ++greedy_size;
    avail &= ~(adj[static_cast<std::size_t>(v)] | (std::uint64_t{1} << v));
  }

  detail::MisSearch search{adj};
  search.best = greedy_size;
  search.best_mask = greedy_mask;
  search.run(all, 0, 0);

  SolveResult r;
  r.size = search.best;
  r.explored = search.explored;
  for (std::uint64_t rest = search.best_mask; rest;) {
    r.witness.push_back(static_cast<std::size_t>(std::countr_zero(rest)));
    rest &= rest - 1;
  }
  return r;
}

}  // namespace xconv
