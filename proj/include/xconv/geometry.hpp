#pragma once

#include "xconv/rational.hpp"

#include <ostream>
#include <tuple>

namespace xconv {

struct Point2 {
  Rational x, y;

  friend bool operator==(const Point2& a, const Point2& b) {
    return a.x == b.x && a.y == b.y;
  }
  friend bool operator!=(const Point2& a, const Point2& b) { return !(a == b); }
  friend bool operator<(const Point2& a, const Point2& b) {
    return std::tie(a.x, a.y) < std::tie(b.x, b.y);
  }
};

struct Point3 {
  Rational x, y, z;

  friend bool operator==(const Point3& a, const Point3& b) {
    return a.x == b.x && a.y == b.y && a.z == b.z;
  }
  friend bool operator!=(const Point3& a, const Point3& b) { return !(a == b); }
  friend bool operator<(const Point3& a, const Point3& b) {
    return std::tie(a.x, a.y, a.z) < std::tie(b.x, b.y, b.z);
  }
};

inline std::ostream& operator<<(std::ostream& os, const Point2& p) {
  return os << '(' << p.x << ", " << p.y << ')';
}

inline std::ostream& operator<<(std::ostream& os, const Point3& p) {
  return os << '(' << p.x << ", " << p.y << ", " << p.z << ')';
}

/// Oriented affine plane, the functional h(p) = a·x + b·y + c·z + d.
struct Plane3 {
  Rational a, b, c, d;

  Plane3(Rational a_, Rational b_, Rational c_, Rational d_)
      : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {
    if (a.is_zero() && b.is_zero() && c.is_zero())
      throw std::invalid_argument("plane: zero normal");
  }

  Rational eval(const Point3& p) const { return a * p.x + b * p.y + c * p.z + d; }

  friend bool operator==(const Plane3& u, const Plane3& v) {
    return u.a == v.a && u.b == v.b && u.c == v.c && u.d == v.d;
  }
};

/// The paraboloid lifting transform (x, y) -> (x, y, x^2 + y^2).
inline Point3 lift(const Point2& p) {
  return Point3{p.x, p.y, p.x * p.x + p.y * p.y};
}

/// Drops the lifted coordinate back to the plane.
inline Point2 project_xy(const Point3& p) { return Point2{p.x, p.y}; }

inline Sign plane_side(const Plane3& h, const Point3& p) { return sign_of(h.eval(p)); }

/// The unique plane whose paraboloid section projects to the circle around
/// `center` with squared radius `r_squared`, oriented so that lifted points of
/// planar points outside the circle land on the positive side:
///   plane_side(h, lift(q)) = sign(|q - center|^2 - r_squared).
inline Plane3 circle_lift_plane(const Point2& center, const Rational& r_squared) {
  if (r_squared.sign() <= 0)
    throw std::invalid_argument("circle_lift_plane: squared radius must be positive");
  const Rational norm2 = center.x * center.x + center.y * center.y;
  return Plane3(-2 * center.x, -2 * center.y, Rational(1), norm2 - r_squared);
}

inline Point3 midpoint(const Point3& a, const Point3& b) {
  const Rational half(1, 2);
  return Point3{(a.x + b.x) * half, (a.y + b.y) * half, (a.z + b.z) * half};
}

inline Point2 midpoint(const Point2& a, const Point2& b) {
  const Rational half(1, 2);
  return Point2{(a.x + b.x) * half, (a.y + b.y) * half};
}

inline Rational squared_distance(const Point2& a, const Point2& b) {
  const Rational dx = a.x - b.x, dy = a.y - b.y;
  return dx * dx + dy * dy;
}

}  // namespace xconv
