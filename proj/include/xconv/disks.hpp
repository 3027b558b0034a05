#pragma once

#include "xconv/geometry.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace xconv {

/// Indices of a touching disk pair, 0-based with i < j. External artifacts
/// (files, CLI output) use 1-based indices; in-memory indices are 0-based.
struct TangentPair {
  std::size_t i = 0, j = 0;

  friend bool operator==(const TangentPair& a, const TangentPair& b) {
    return a.i == b.i && a.j == b.j;
  }
  friend bool operator!=(const TangentPair& a, const TangentPair& b) { return !(a == b); }
  friend bool operator<(const TangentPair& a, const TangentPair& b) {
    return a.i != b.i ? a.i < b.i : a.j < b.j;
  }
};

/// Centers of pairwise non-overlapping unit disks (radius 1 implicit).
struct DiskInstance {
  std::vector<Point2> centers;

  std::size_t size() const { return centers.size(); }
};

struct InstanceValidation {
  bool ok = true;
  std::size_t first = 0, second = 0;  // offending pair when !ok
  std::string reason;

  explicit operator bool() const { return ok; }
};

/// Non-overlap check: distinct centers with pairwise squared distance >= 4.
/// Reports the first violating pair.
inline InstanceValidation validate_instance(const DiskInstance& d) {
  const Rational four(4);
  for (std::size_t i = 0; i < d.centers.size(); ++i)
    for (std::size_t j = i + 1; j < d.centers.size(); ++j) {
      if (d.centers[i] == d.centers[j])
        return {false, i, j, "duplicate centers"};
      if (squared_distance(d.centers[i], d.centers[j]) < four)
        return {false, i, j, "overlapping disk interiors"};
    }
  return {};
}

inline void require_valid_instance(const DiskInstance& d) {
  if (const auto v = validate_instance(d); !v) {
    throw std::invalid_argument("invalid disk instance: " + v.reason + " (disks " +
                                std::to_string(v.first + 1) + ", " +
                                std::to_string(v.second + 1) + ")");
  }
}

/// All pairs at squared center distance exactly 4, in lexicographic order.
/// For non-overlapping unit disks these are exactly the intersecting pairs.
inline std::vector<TangentPair> tangent_pairs(const DiskInstance& d) {
  require_valid_instance(d);
  const Rational four(4);
  std::vector<TangentPair> pairs;
  for (std::size_t i = 0; i < d.centers.size(); ++i)
    for (std::size_t j = i + 1; j < d.centers.size(); ++j)
      if (squared_distance(d.centers[i], d.centers[j]) == four)
        pairs.push_back({i, j});
  return pairs;
}

}  // namespace xconv
