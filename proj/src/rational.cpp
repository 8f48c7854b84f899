#include "gstruct/rational.hpp"

#include <cctype>
#include <cmath>

#include "gstruct/errors.hpp"

namespace gstruct {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

mpz_class parse_integer(std::string_view s, std::string_view whole) {
  bool neg = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    neg = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s))
    throw InvalidArgument("not a rational: \"" + std::string(whole) + "\"");
  mpz_class z(std::string(s), 10);
  return neg ? mpz_class(-z) : z;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
    text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
    text.remove_suffix(1);

  if (auto e = text.find_first_of("eE"); e != std::string_view::npos && text.find('/') == std::string_view::npos) {
    Rational mantissa = parse_rational(text.substr(0, e));
    std::string_view exp_text = text.substr(e + 1);
    mpz_class ez = parse_integer(exp_text, text);
    if (!ez.fits_sint_p() || abs(ez) > 4096) throw InvalidArgument("exponent out of range in \"" + std::string(text) + "\"");
    return mantissa * pow(Rational(10), static_cast<int>(ez.get_si()));
  }

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    mpz_class num = parse_integer(text.substr(0, slash), text);
    std::string_view den_text = text.substr(slash + 1);
    if (!all_digits(den_text))
      throw InvalidArgument("bad denominator in \"" + std::string(text) + "\"");
    mpz_class den(std::string(den_text), 10);
    if (den == 0) throw InvalidArgument("zero denominator in \"" + std::string(text) + "\"");
    Rational r(num, den);
    r.canonicalize();
    return r;
  }

  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = text.substr(0, dot);
    std::string_view frac_part = text.substr(dot + 1);
    bool neg = !int_part.empty() && int_part.front() == '-';
    if (!frac_part.empty() && !all_digits(frac_part))
      throw InvalidArgument("not a rational: \"" + std::string(text) + "\"");
    std::string digits;
    std::string_view sign_stripped = int_part;
    if (!sign_stripped.empty() && (sign_stripped.front() == '-' || sign_stripped.front() == '+'))
      sign_stripped.remove_prefix(1);
    if (!sign_stripped.empty() && !all_digits(sign_stripped))
      throw InvalidArgument("not a rational: \"" + std::string(text) + "\"");
    if (sign_stripped.empty() && frac_part.empty())
      throw InvalidArgument("not a rational: \"" + std::string(text) + "\"");
    digits.append(sign_stripped).append(frac_part);
    mpz_class num(digits.empty() ? std::string("0") : digits, 10);
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_part.size());
    Rational r(neg ? mpz_class(-num) : num, den);
    r.canonicalize();
    return r;
  }

  return Rational(parse_integer(text, text));
}

std::string to_string(const Rational& r) {
  Rational c = r;
  c.canonicalize();
  return c.get_str(10);
}

std::optional<Rational> exact_root(const Rational& x, unsigned n) {
  if (x < 0) throw InvalidArgument("exact_root of a negative rational");
  if (n == 0) throw InvalidArgument("exact_root with n = 0");
  mpz_class num_root, den_root;
  bool num_exact = mpz_root(num_root.get_mpz_t(), x.get_num_mpz_t(), n) != 0;
  bool den_exact = mpz_root(den_root.get_mpz_t(), x.get_den_mpz_t(), n) != 0;
  if (!num_exact || !den_exact) return std::nullopt;
  Rational r(num_root, den_root);
  r.canonicalize();
  return r;
}

Rational pow(const Rational& r, int e) {
  if (e < 0) {
    if (is_zero(r)) throw DomainError("negative power of zero");
    return pow(Rational(1) / r, -e);
  }
  Rational out(1);
  for (int i = 0; i < e; ++i) out *= r;
  return out;
}

RootScalar rational_power(const Rational& x, int num, unsigned den) {
  if (x <= 0) throw DomainError("rational_power needs a positive base");
  RootScalar out;
  if (auto root = exact_root(x, den)) {
    Rational p = pow(*root, num);
    out.exact = p;
    out.value = to_double(p);
    return out;
  }
  double xd = to_double(x);
  if (std::isfinite(xd) && xd > 0) {
    out.value = std::pow(xd, static_cast<double>(num) / den);
    if (std::isfinite(out.value) && out.value > 0) return out;
  }
  // log domain for operands outside the double range
  double log_x = 0;
  {
    long exp_num = 0, exp_den = 0;
    double m_num = mpz_get_d_2exp(&exp_num, x.get_num_mpz_t());
    double m_den = mpz_get_d_2exp(&exp_den, x.get_den_mpz_t());
    log_x = std::log(m_num) - std::log(m_den) + (exp_num - exp_den) * std::log(2.0);
  }
  out.value = std::exp(static_cast<double>(num) / den * log_x);
  return out;
}

}  // namespace gstruct
