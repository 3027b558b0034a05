#pragma once

#include "xconv/hull_cache.hpp"
#include "xconv/mis.hpp"
#include "xconv/predicates.hpp"
#include "xconv/reduction.hpp"
#include "xconv/solve_result.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace xconv {

/// A weak ε-net verification instance: ground set X, candidate net S, exact
/// rational ε in (0, 1].
struct NetInstance {
  std::vector<Point3> ground;
  std::vector<Point3> net;
  Rational epsilon;
};

/// Verdict with an exact certificate: when S is not a net, `violation` holds
/// a heavy subset T ⊆ X (indices into ground) whose hull avoids every net
/// point; conv(T) is then a violating convex range.
struct NetVerdict {
  bool is_net = true;
  std::optional<std::vector<std::size_t>> violation;
};

namespace detail {

// Largest T ⊆ ground with conv(T) disjoint from the net. Once conv(T) hits a
// net point every superset does too, which prunes the subset tree.
struct AvoidingSubsetSearch {
  std::size_t ground_count = 0;
  const CoverTable& cover;     // targets: net points, supports: ground points
  std::size_t net_offset = 0;  // net point k lives at index net_offset + k
  std::size_t net_count = 0;

  std::size_t best = 0;
  std::uint64_t best_mask = 0;

  bool hits_net(std::uint64_t mask) const {
    for (std::size_t k = 0; k < net_count; ++k)
      if (cover.in_hull(net_offset + k, mask)) return true;
    return false;
  }

  void dfs(std::size_t i, std::uint64_t mask, std::size_t size) {
    if (size > best) {
      best = size;
      best_mask = mask;
    }
    if (i == ground_count) return;
    if (size + (ground_count - i) <= best) return;
    const std::uint64_t bigger = mask | (std::uint64_t{1} << i);
    if (!hits_net(bigger)) dfs(i + 1, bigger, size + 1);
    dfs(i + 1, mask, size);
  }
};

}  // namespace detail

/// Decides whether S is a weak ε-net for the ground set against all convex
/// ranges. Ranges are canonicalized to hulls of ground subsets (lossless per
/// the definition), and the heaviness threshold |T| >= ε|X| is compared by
/// exact cross-multiplication.
inline NetVerdict verify_weak_eps_net(const NetInstance& inst) {
  if (inst.ground.empty())
    throw std::invalid_argument("verify_weak_eps_net: empty ground set");
  if (inst.epsilon.sign() <= 0 || inst.epsilon > 1)
    throw std::invalid_argument("verify_weak_eps_net: epsilon must be in (0, 1]");
  detail::require_distinct(std::span<const Point3>(inst.ground), "verify_weak_eps_net ground");
  detail::require_distinct(std::span<const Point3>(inst.net), "verify_weak_eps_net net");
  const std::size_t g = inst.ground.size();
  if (g + inst.net.size() > CoverTable::kMaxPoints)
    throw std::invalid_argument("verify_weak_eps_net: instance too large");

  std::vector<Point3> all = inst.ground;
  all.insert(all.end(), inst.net.begin(), inst.net.end());
  const std::uint64_t ground_mask = (std::uint64_t{1} << g) - 1;
  std::uint64_t net_mask = 0;
  for (std::size_t k = 0; k < inst.net.size(); ++k)
    net_mask |= std::uint64_t{1} << (g + k);
  const CoverTable cover = CoverTable::build(all, net_mask, ground_mask);

  detail::AvoidingSubsetSearch search{g, cover, g, inst.net.size()};
  search.dfs(0, 0, 0);

  // Heavy iff |T| * den >= num * |X|, with epsilon = num/den.
  const Int num = numerator(inst.epsilon), den = denominator(inst.epsilon);
  NetVerdict verdict;
  if (Int(search.best) * den >= num * Int(g)) {
    verdict.is_net = false;
    std::vector<std::size_t> t;
    for (std::uint64_t rest = search.best_mask; rest;) {
      t.push_back(static_cast<std::size_t>(std::countr_zero(rest)));
      rest &= rest - 1;
    }
    verdict.violation = std::move(t);
  }
  return verdict;
}

/// Theorem checker for the net characterization: B is an (m/n)-net for L
/// iff the disks have no independent set of size m. Both sides are evaluated
/// independently; on a valid instance this must return true, and false means
/// the implementation (or the claim) is broken.
inline bool net_iff_no_independent_set(const DiskInstance& d, std::size_t m) {
  require_valid_instance(d);
  const std::size_t n = d.size();
  if (m < 1 || m > n)
    throw std::invalid_argument("net_iff_no_independent_set: m out of range");
  const ReductionOutput r = build_reduction(d);
  NetInstance inst;
  inst.ground = r.lifted;
  for (const Blocker& b : r.blockers) inst.net.push_back(b.point);
  inst.epsilon = make_rational(Int(m), Int(n));
  const bool is_net = verify_weak_eps_net(inst).is_net;
  const bool no_independent_m =
      max_independent_set(TangencyGraph::from_instance(d)).size < m;
  return is_net == no_independent_m;
}

/// Red and blue point sets; the two classes must be disjoint.
struct ColoredPoints {
  std::vector<Point3> red;
  std::vector<Point3> blue;
};

namespace detail {

// Exact red-blue discrepancy over convex ranges. Ranges are canonicalized to
// hull-closed subsets A (conv(A) ∩ P = A); the search decides each point in
// turn and propagates closure: an excluded point caught inside the hull of
// the included ones kills the branch.
struct DiscrepancySearch {
  std::size_t n = 0;
  std::size_t red_count = 0;  // points 0..red_count-1 are red
  const CoverTable& cover;

  std::size_t best = 0;
  std::uint64_t best_mask = 0;
  std::uint64_t explored = 0;

  void dfs(std::size_t i, std::uint64_t inc, std::uint64_t exc, long red_in, long blue_in) {
    ++explored;
    const long rem_red = static_cast<long>(red_count) - static_cast<long>(std::min(i, red_count));
    const long rem_blue = static_cast<long>(n - red_count) -
                          static_cast<long>(i > red_count ? i - red_count : 0);
    const long up = std::max(red_in - blue_in + rem_red, blue_in - red_in + rem_blue);
    if (up <= static_cast<long>(best)) return;
    if (i == n) {
      const long score = red_in >= blue_in ? red_in - blue_in : blue_in - red_in;
      if (score > static_cast<long>(best)) {
        best = static_cast<std::size_t>(score);
        best_mask = inc;
      }
      return;
    }
    const bool is_red = i < red_count;
    const std::uint64_t bit = std::uint64_t{1} << i;
    // Include point i: every previously excluded point must stay outside.
    bool closure_ok = true;
    for (std::uint64_t rest = exc; rest && closure_ok;) {
      const int q = std::countr_zero(rest);
      rest &= rest - 1;
      if (cover.in_hull(static_cast<std::size_t>(q), inc | bit)) closure_ok = false;
    }
    if (closure_ok)
      dfs(i + 1, inc | bit, exc, red_in + (is_red ? 1 : 0), blue_in + (is_red ? 0 : 1));
    // Exclude point i: it must lie outside the hull of the included ones.
    if (!cover.in_hull(i, inc)) dfs(i + 1, inc, exc | bit, red_in, blue_in);
  }
};

}  // namespace detail

/// Exact maximum of ||A ∩ red| - |A ∩ blue|| over hull-closed subsets A of
/// red ∪ blue, which realizes the discrepancy over all convex ranges. The
/// witness holds indices into red followed by blue.
inline SolveResult discrepancy(const ColoredPoints& c) {
  for (const Point3& r : c.red)
    for (const Point3& b : c.blue)
      if (r == b) throw std::invalid_argument("discrepancy: red and blue sets overlap");
  std::vector<Point3> all = c.red;
  all.insert(all.end(), c.blue.begin(), c.blue.end());
  detail::require_distinct(std::span<const Point3>(all), "discrepancy");
  if (all.size() > CoverTable::kMaxPoints)
    throw std::invalid_argument("discrepancy: too many points");

  SolveResult result;
  if (all.empty()) return result;
  const std::uint64_t full = (std::uint64_t{1} << all.size()) - 1;
  const CoverTable cover = CoverTable::build(all, full, full);
  detail::DiscrepancySearch search{all.size(), c.red.size(), cover};
  search.dfs(0, 0, 0, 0, 0);
  result.size = search.best;
  result.explored = search.explored;
  for (std::uint64_t rest = search.best_mask; rest;) {
    result.witness.push_back(static_cast<std::size_t>(std::countr_zero(rest)));
    rest &= rest - 1;
  }
  return result;
}

}  // namespace xconv
