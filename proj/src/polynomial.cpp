#include "gstruct/polynomial.hpp"

#include <algorithm>

#include "gstruct/errors.hpp"

namespace gstruct {

Polynomial Polynomial::constant(std::size_t variables, const Rational& c) {
  Polynomial p(variables);
  p.add_term(Exponent(variables, 0), c);
  return p;
}

Polynomial Polynomial::coordinate(std::size_t variables, std::size_t i) {
  require(i < variables, "coordinate index out of range");
  Exponent e(variables, 0);
  e[i] = 1;
  Polynomial p(variables);
  p.add_term(e, Rational(1));
  return p;
}

Polynomial Polynomial::monomial(const Rational& c, Exponent e) {
  Polynomial p(e.size());
  p.add_term(e, c);
  return p;
}

std::size_t Polynomial::degree() const {
  std::size_t d = 0;
  for (const auto& [e, c] : terms_) {
    std::size_t t = 0;
    for (auto k : e) t += k;
    d = std::max(d, t);
  }
  return d;
}

void Polynomial::add_term(const Exponent& e, const Rational& c) {
  require(e.size() == vars_, "exponent length does not match the variable count");
  if (gstruct::is_zero(c)) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (gstruct::is_zero(it->second)) terms_.erase(it);
  }
}

Polynomial Polynomial::derivative(std::size_t i) const {
  require(i < vars_, "derivative index out of range");
  Polynomial d(vars_);
  for (const auto& [e, c] : terms_) {
    if (e[i] == 0) continue;
    Exponent f = e;
    --f[i];
    d.add_term(f, c * e[i]);
  }
  return d;
}

Rational Polynomial::evaluate(const Point& x) const {
  require(x.size() == vars_, "point dimension does not match the polynomial");
  Rational sum = 0;
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (std::size_t k = 0; k < vars_; ++k)
      if (e[k]) t *= pow(x[k], static_cast<int>(e[k]));
    sum += t;
  }
  return sum;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  require(vars_ == o.vars_, "polynomial variable count mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  require(vars_ == o.vars_, "polynomial variable count mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& k) {
  if (gstruct::is_zero(k)) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= k;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require(a.vars_ == b.vars_, "polynomial variable count mismatch");
  Polynomial p(a.vars_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      Exponent e(a.vars_);
      for (std::size_t k = 0; k < a.vars_; ++k) e[k] = ea[k] + eb[k];
      p.add_term(e, ca * cb);
    }
  return p;
}

ValueGradient poly_eval_grad(const Polynomial& f, const Point& x) {
  require(x.size() == f.variables(), "point dimension does not match the polynomial");
  ValueGradient out{f.evaluate(x), {}};
  out.gradient.reserve(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out.gradient.push_back(f.derivative(i).evaluate(x));
  return out;
}

}  // namespace gstruct
