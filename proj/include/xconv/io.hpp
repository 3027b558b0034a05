#pragma once

#include "xconv/disks.hpp"
#include "xconv/reduction.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>

namespace xconv {

using nlohmann::json;

// --- rationals as canonical strings ------------------------------------

inline json rational_to_json(const Rational& r) { return rational_to_string(r); }

inline Rational rational_from_json(const json& j, const std::string& where) {
  if (!j.is_string())
    throw std::invalid_argument(where + ": expected a rational string");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(where + ": " + e.what());
  }
}

// --- instance files -----------------------------------------------------

inline json instance_to_json(const DiskInstance& d) {
  json centers = json::array();
  for (const Point2& c : d.centers)
    centers.push_back(json::array({rational_to_json(c.x), rational_to_json(c.y)}));
  return json{{"radius", "1"}, {"centers", std::move(centers)}};
}

inline DiskInstance instance_from_json(const json& j) {
  if (!j.is_object() || !j.contains("radius") || !j.contains("centers"))
    throw std::invalid_argument("instance file: expected {\"radius\", \"centers\"}");
  const Rational radius = rational_from_json(j.at("radius"), "radius");
  if (radius != 1) throw std::invalid_argument("instance file: radius must equal 1");
  const json& centers = j.at("centers");
  if (!centers.is_array()) throw std::invalid_argument("instance file: centers must be an array");
  DiskInstance d;
  d.centers.reserve(centers.size());
  for (std::size_t i = 0; i < centers.size(); ++i) {
    const json& c = centers[i];
    const std::string where = "centers[" + std::to_string(i + 1) + "]";
    if (!c.is_array() || c.size() != 2)
      throw std::invalid_argument(where + ": expected [x, y]");
    d.centers.push_back(Point2{rational_from_json(c[0], where + "[0]"),
                               rational_from_json(c[1], where + "[1]")});
  }
  return d;
}

// --- points files -------------------------------------------------------

inline json point3_to_json(const Point3& p) {
  return json::array({rational_to_json(p.x), rational_to_json(p.y), rational_to_json(p.z)});
}

inline Point3 point3_from_json(const json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 3)
    throw std::invalid_argument(where + ": expected [x, y, z]");
  return Point3{rational_from_json(j[0], where + "[0]"), rational_from_json(j[1], where + "[1]"),
                rational_from_json(j[2], where + "[2]")};
}

inline json points_to_json(const ReductionOutput& r) {
  json lifted = json::array();
  for (const Point3& p : r.lifted) lifted.push_back(point3_to_json(p));
  json blockers = json::array();
  for (const Blocker& b : r.blockers) {
    blockers.push_back(json{{"point", point3_to_json(b.point)},
                            {"pair", json::array({b.pair.i + 1, b.pair.j + 1})}});
  }
  return json{{"L", std::move(lifted)}, {"B", std::move(blockers)}};
}

/// Parses a points file. Structural validation only (shapes, index ranges,
/// canonical rationals); geometric properties are the checkers' concern so
/// that corrupted files are diagnosed rather than rejected. The disk centers
/// are recovered by projecting L.
inline ReductionOutput points_from_json(const json& j) {
  if (!j.is_object() || !j.contains("L") || !j.contains("B"))
    throw std::invalid_argument("points file: expected {\"L\", \"B\"}");
  const json& lifted = j.at("L");
  const json& blockers = j.at("B");
  if (!lifted.is_array() || !blockers.is_array())
    throw std::invalid_argument("points file: L and B must be arrays");
  ReductionOutput r;
  for (std::size_t i = 0; i < lifted.size(); ++i)
    r.lifted.push_back(point3_from_json(lifted[i], "L[" + std::to_string(i + 1) + "]"));
  for (std::size_t k = 0; k < blockers.size(); ++k) {
    const std::string where = "B[" + std::to_string(k + 1) + "]";
    const json& b = blockers[k];
    if (!b.is_object() || !b.contains("point") || !b.contains("pair"))
      throw std::invalid_argument(where + ": expected {\"point\", \"pair\"}");
    const json& pair = b.at("pair");
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_unsigned() ||
        !pair[1].is_number_unsigned())
      throw std::invalid_argument(where + ".pair: expected [i, j] with positive integers");
    const std::uint64_t i1 = pair[0].get<std::uint64_t>(), j1 = pair[1].get<std::uint64_t>();
    if (i1 < 1 || i1 >= j1 || j1 > r.lifted.size())
      throw std::invalid_argument(where + ".pair: indices must satisfy 1 <= i < j <= |L|");
    Blocker blocker{point3_from_json(b.at("point"), where + ".point"),
                    TangentPair{static_cast<std::size_t>(i1 - 1),
                                static_cast<std::size_t>(j1 - 1)}};
    for (const Blocker& prev : r.blockers)
      if (prev.pair == blocker.pair)
        throw std::invalid_argument(where + ".pair: duplicate pair");
    r.blockers.push_back(std::move(blocker));
  }
  r.instance.centers.reserve(r.lifted.size());
  for (const Point3& p : r.lifted) r.instance.centers.push_back(project_xy(p));
  return r;
}

// --- hashing ------------------------------------------------------------

inline std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = digits[h & 0xf];
    h >>= 4;
  }
  return out;
}

inline std::string instance_hash(const DiskInstance& d) {
  return fnv1a_hex(instance_to_json(d).dump());
}

/// Canonical on-disk form: two-space indent, trailing newline.
inline std::string dump_canonical(const json& j) { return j.dump(2) + "\n"; }

}  // namespace xconv
