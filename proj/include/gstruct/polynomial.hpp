#pragma once

#include <map>
#include <vector>

#include "gstruct/rational.hpp"

namespace gstruct {

using Exponent = std::vector<unsigned>;
using Point = std::vector<Rational>;

/// Sparse multivariate polynomial over the rationals in a fixed number of
/// variables. Zero coefficients are never stored.
class Polynomial {
public:
  Polynomial() = default;
  explicit Polynomial(std::size_t variables) : vars_(variables) {}

  static Polynomial constant(std::size_t variables, const Rational& c);
  /// The coordinate function x^i (0-based).
  static Polynomial coordinate(std::size_t variables, std::size_t i);
  static Polynomial monomial(const Rational& c, Exponent e);

  std::size_t variables() const { return vars_; }
  const std::map<Exponent, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t degree() const;

  /// Adds c·x^e to the polynomial.
  void add_term(const Exponent& e, const Rational& c);

  Polynomial derivative(std::size_t i) const;
  Rational evaluate(const Point& x) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Rational& k);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Rational& k, Polynomial a) { return a *= k; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
  }

private:
  std::size_t vars_ = 0;
  std::map<Exponent, Rational> terms_;
};

struct ValueGradient {
  Rational value;
  std::vector<Rational> gradient;
};

/// Value and gradient at x by formal differentiation.
ValueGradient poly_eval_grad(const Polynomial& f, const Point& x);

}  // namespace gstruct
