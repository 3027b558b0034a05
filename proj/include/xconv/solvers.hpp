#pragma once

#include "xconv/hull_cache.hpp"
#include "xconv/predicates.hpp"
#include "xconv/solve_result.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

namespace xconv {
namespace detail {

// Depth-first search over subsets in a fixed lexicographic point order,
// extending only sets that stay in convex position (convex position is
// subset-monotone, so this prunes soundly). Emptiness is not monotone; it is
// only consulted before an incumbent update.
struct ConvexSubsetSearch {
  std::span<const Point3> pts;
  bool require_empty = false;
  std::optional<std::size_t> stop_at;  // early exit for decision queries

  std::vector<std::size_t> order;  // search position -> original index
  CoverTable cover;
  std::size_t n = 0;
  std::size_t best = 0;
  std::uint64_t best_mask = 0;
  std::uint64_t explored = 0;
  bool stopped = false;

  SolveResult run() {
    require_distinct(pts, "convex subset search");
    n = pts.size();
    if (n > CoverTable::kMaxPoints)
      throw std::invalid_argument("convex subset search: too many points");
    order.resize(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return pts[a] < pts[b]; });
    std::vector<Point3> sorted;
    sorted.reserve(n);
    for (std::size_t i : order) sorted.push_back(pts[i]);
    if (n > 0) {
      const std::uint64_t all = n == 63 ? ~std::uint64_t{0} >> 1 : (std::uint64_t{1} << n) - 1;
      cover = CoverTable::build(sorted, all, all);
    }
    if (stop_at && *stop_at == 0) {
      // The empty set is in (empty) convex position; nothing to search.
      SolveResult r;
      r.size = 0;
      r.explored = 0;
      return r;
    }
    dfs(0, 0, 0);

    SolveResult r;
    r.size = best;
    r.explored = explored;
    for (std::uint64_t rest = best_mask; rest;) {
      const int i = std::countr_zero(rest);
      rest &= rest - 1;
      r.witness.push_back(order[static_cast<std::size_t>(i)]);
    }
    std::sort(r.witness.begin(), r.witness.end());
    return r;
  }

  bool hull_is_empty(std::uint64_t mask) const {
    for (std::size_t q = 0; q < n; ++q) {
      if (mask >> q & 1) continue;
      if (cover.in_hull(q, mask)) return false;
    }
    return true;
  }

  void dfs(std::size_t i, std::uint64_t mask, std::size_t size) {
    if (stopped) return;
    ++explored;
    if (size + (n - i) <= best) return;  // cannot beat the incumbent
    if (i == n) return;
    if (cover.extend_keeps_convex(mask, i)) {
      const std::uint64_t bigger = mask | (std::uint64_t{1} << i);
      const std::size_t bigger_size = size + 1;
      if (bigger_size > best && (!require_empty || hull_is_empty(bigger))) {
        best = bigger_size;
        best_mask = bigger;
        if (stop_at && best >= *stop_at) {
          stopped = true;
          return;
        }
      }
      dfs(i + 1, bigger, bigger_size);
    }
    dfs(i + 1, mask, size);
  }
};

}  // namespace detail

/// Exact maximum-cardinality subset in convex position (the Erdős–Szekeres
/// optimum). Witness indices refer to the input order.
inline SolveResult largest_convex_subset(std::span<const Point3> pts) {
  detail::ConvexSubsetSearch search;
  search.pts = pts;
  return search.run();
}

/// Exact maximum-cardinality subset in empty convex position within P.
inline SolveResult largest_empty_convex_subset(std::span<const Point3> pts) {
  detail::ConvexSubsetSearch search;
  search.pts = pts;
  search.require_empty = true;
  return search.run();
}

/// Is there a subset of k points in convex position? May stop at the first
/// witness of size k.
inline bool decide_es(std::span<const Point3> pts, std::size_t k) {
  if (k == 0) return true;
  detail::ConvexSubsetSearch search;
  search.pts = pts;
  search.stop_at = k;
  return search.run().size >= k;
}

/// Is there a subset of k points in empty convex position?
inline bool decide_lecs(std::span<const Point3> pts, std::size_t k) {
  if (k == 0) return true;
  detail::ConvexSubsetSearch search;
  search.pts = pts;
  search.require_empty = true;
  search.stop_at = k;
  return search.run().size >= k;
}

}  // namespace xconv
