#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace gstruct {

/// Arbitrary precision rational, always canonical (lowest terms, positive
/// denominator).
using Rational = mpq_class;

/// Parses "p", "p/q", "-p/q" or a finite decimal such as "-0.125" exactly.
Rational parse_rational(std::string_view text);

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& r);

inline double to_double(const Rational& r) { return r.get_d(); }

inline Rational abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

/// Exact n-th root of a nonnegative rational, if it is rational.
std::optional<Rational> exact_root(const Rational& x, unsigned n);

/// r^e for a (possibly negative) integer exponent; r must be nonzero when e < 0.
Rational pow(const Rational& r, int e);

/// A positive real obtained through root extraction. `value` is always set;
/// `exact` carries the rational value when the root happens to be rational.
struct RootScalar {
  double value = 0.0;
  std::optional<Rational> exact;

  static RootScalar from_exact(const Rational& r) { return {to_double(r), r}; }
};

/// x^(num/den) for x > 0, exact when the den-th root of x is rational.
RootScalar rational_power(const Rational& x, int num, unsigned den);

}  // namespace gstruct
