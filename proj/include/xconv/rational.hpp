#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace xconv {

// Exact arithmetic substrate. Every predicate in this library is decided over
// these types; there is no floating point anywhere on a decision path.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Trichotomy result of an exact sign evaluation. Negative < Zero < Positive.
enum class Sign : int { Negative = -1, Zero = 0, Positive = 1 };

inline Sign sign_of(const Int& v) {
  const int s = v.sign();
  return s < 0 ? Sign::Negative : (s > 0 ? Sign::Positive : Sign::Zero);
}

inline Sign sign_of(const Rational& v) {
  const int s = v.sign();
  return s < 0 ? Sign::Negative : (s > 0 ? Sign::Positive : Sign::Zero);
}

inline const char* to_string(Sign s) {
  switch (s) {
    case Sign::Negative: return "negative";
    case Sign::Zero: return "zero";
    default: return "positive";
  }
}

/// Builds the canonical rational num/den. Rejects a zero denominator; a
/// negative denominator is folded into the numerator.
inline Rational make_rational(Int num, Int den) {
  if (den.is_zero()) throw std::invalid_argument("rational: zero denominator");
  if (den.sign() < 0) {
    num.backend().negate();
    den.backend().negate();
  }
  return Rational(std::move(num), std::move(den));
}

/// Parses the canonical serialization: a decimal integer string, or "p/q"
/// with q a positive decimal integer. No whitespace, no exponents.
inline Rational parse_rational(std::string_view text) {
  const auto fail = [&] {
    throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
  };
  if (text.empty()) fail();
  const auto digits = [&](std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
      if (c < '0' || c > '9') return false;
    return true;
  };
  std::string_view num = text, den = "1";
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
  }
  std::string_view num_digits = num;
  bool neg = false;
  if (!num_digits.empty() && num_digits.front() == '-') {
    neg = true;
    num_digits.remove_prefix(1);
  }
  if (!digits(num_digits) || !digits(den)) fail();
  Int d{std::string(den)};
  if (d.is_zero()) fail();
  Int n{std::string(num_digits)};
  if (neg) n.backend().negate();
  return Rational(std::move(n), std::move(d));
}

/// Canonical serialization: "p" when the denominator is 1, else "p/q".
inline std::string rational_to_string(const Rational& r) { return r.str(); }

}  // namespace xconv
