#pragma once

#include "xconv/predicates.hpp"

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace xconv {

/// Memoized Caratheodory supports over an indexed point set.
///
/// For each target point m the table stores every support mask s (at most 4
/// support points, m excluded) with pts[m] in conv(s). A hull-membership
/// query against any subset of the support universe then reduces to scanning
/// the target's covers for a mask contained in the subset, which is what the
/// combinatorial searches in this library spend almost all of their time on.
class CoverTable {
 public:
  static constexpr std::size_t kMaxPoints = 63;

  CoverTable() = default;

  /// Builds covers for the points selected by `targets`, with supports drawn
  /// from the points selected by `supports` (both bitmasks over `pts`).
  static CoverTable build(std::span<const Point3> pts, std::uint64_t targets,
                          std::uint64_t supports) {
    const std::size_t n = pts.size();
    if (n > kMaxPoints) throw std::invalid_argument("CoverTable: too many points");
    CoverTable table;
    table.covers_.resize(n);
    const auto s = detail::scale_to_integers(pts);

    std::vector<std::size_t> sup, tgt;
    for (std::size_t i = 0; i < n; ++i) {
      if (supports >> i & 1) sup.push_back(i);
      if (targets >> i & 1) tgt.push_back(i);
    }
    const auto bit = [](std::size_t i) { return std::uint64_t{1} << i; };
    const auto record = [&](std::size_t m, std::uint64_t mask) {
      if (!(mask >> m & 1)) table.covers_[m].push_back(mask);
    };

    for (std::size_t a : sup)
      for (std::size_t m : tgt)
        if (m != a && detail::in_hull_1(s[m], s[a])) record(m, bit(a));

    for (std::size_t ai = 0; ai < sup.size(); ++ai)
      for (std::size_t bi = ai + 1; bi < sup.size(); ++bi) {
        const std::size_t a = sup[ai], b = sup[bi];
        const std::uint64_t mask = bit(a) | bit(b);
        for (std::size_t m : tgt)
          if (m != a && m != b && detail::in_hull_2(s[m], s[a], s[b])) record(m, mask);
      }

    for (std::size_t ai = 0; ai < sup.size(); ++ai)
      for (std::size_t bi = ai + 1; bi < sup.size(); ++bi)
        for (std::size_t ci = bi + 1; ci < sup.size(); ++ci) {
          const std::size_t a = sup[ai], b = sup[bi], c = sup[ci];
          const std::uint64_t mask = bit(a) | bit(b) | bit(c);
          for (std::size_t m : tgt)
            if (!(mask >> m & 1) && detail::in_hull_3(s[m], s[a], s[b], s[c]))
              record(m, mask);
        }

    for (std::size_t ai = 0; ai < sup.size(); ++ai)
      for (std::size_t bi = ai + 1; bi < sup.size(); ++bi)
        for (std::size_t ci = bi + 1; ci < sup.size(); ++ci)
          for (std::size_t di = ci + 1; di < sup.size(); ++di) {
            const std::size_t a = sup[ai], b = sup[bi], c = sup[ci], d = sup[di];
            const std::uint64_t mask = bit(a) | bit(b) | bit(c) | bit(d);
            for (std::size_t m : tgt)
              if (!(mask >> m & 1) && detail::in_hull_4(s[m], s[a], s[b], s[c], s[d]))
                record(m, mask);
          }
    return table;
  }

  std::size_t size() const { return covers_.size(); }

  /// pts[target] in conv(points of `subset`)? `subset` must not contain the
  /// target itself and must stay within the support universe the table was
  /// built with.
  bool in_hull(std::size_t target, std::uint64_t subset) const {
    for (const std::uint64_t s : covers_[target])
      if ((s & subset) == s) return true;
    return false;
  }

  /// Is the selected subset in convex position? Needs a table whose targets
  /// and supports both include the subset.
  bool convex_position(std::uint64_t subset) const {
    for (std::uint64_t rest = subset; rest;) {
      const int m = std::countr_zero(rest);
      rest &= rest - 1;
      if (in_hull(static_cast<std::size_t>(m), subset ^ (std::uint64_t{1} << m)))
        return false;
    }
    return true;
  }

  /// Given `subset` in convex position, does adding point p keep it so?
  bool extend_keeps_convex(std::uint64_t subset, std::size_t p) const {
    if (in_hull(p, subset)) return false;
    const std::uint64_t bigger = subset | (std::uint64_t{1} << p);
    for (std::uint64_t rest = subset; rest;) {
      const int m = std::countr_zero(rest);
      rest &= rest - 1;
      if (in_hull(static_cast<std::size_t>(m), bigger ^ (std::uint64_t{1} << m)))
        return false;
    }
    return true;
  }

  const std::vector<std::uint64_t>& covers(std::size_t target) const {
    return covers_[target];
  }

 private:
  std::vector<std::vector<std::uint64_t>> covers_;
};

}  // namespace xconv
