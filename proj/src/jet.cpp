#include "gstruct/jet.hpp"

#include <cmath>

namespace gstruct {

GL1Element::GL1Element(RatMatrix m) : m_(std::move(m)) {
  require(m_.square(), "G1 element must be a square matrix");
  det_ = determinant(m_);
  if (is_zero(det_)) throw DomainError("G1 element must be invertible (det = 0)");
  inv_ = gstruct::inverse(m_);
}

Jet2::Jet2(GL1Element a_, Sym2Tensor s_) : a(std::move(a_)), s(std::move(s_)) {
  require(a.dim() == s.dim(), "Jet2: dimensions of a and s differ");
}

Sym2Tensor sym2_transport(const GL1Element& b, const Sym2Tensor& s) {
  const std::size_t n = b.dim();
  require(s.dim() == n, "sym2_transport: dimension mismatch");
  const RatMatrix& bm = b.matrix();
  const RatMatrix bt = bm.transpose();

  // u^l = bᵗ S_l b, with S_l the symmetric matrix (s^l_{mp})
  std::vector<RatMatrix> u;
  u.reserve(n);
  for (std::size_t l = 0; l < n; ++l) {
    RatMatrix sl(n, n);
    for (std::size_t m = 0; m < n; ++m)
      for (std::size_t p = 0; p < n; ++p) sl(m, p) = s(l, m, p);
    u.push_back(bt * sl * bm);
  }

  const RatMatrix& binv = b.inverse();
  Sym2Tensor out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = j; k < n; ++k) {
        Rational acc = 0;
        for (std::size_t l = 0; l < n; ++l)
          if (!is_zero(binv(i, l))) acc += binv(i, l) * u[l](j, k);
        out.set(i, j, k, std::move(acc));
      }
  return out;
}

Jet2 jet2_mul(const Jet2& x, const Jet2& y) {
  require(x.dim() == y.dim(), "jet2_mul: dimension mismatch");
  return Jet2(x.a * y.a, sym2_transport(y.a, x.s) + y.s);
}

Jet2 jet2_inv(const Jet2& x) {
  GL1Element ainv(x.a.inverse());
  return Jet2(ainv, -sym2_transport(ainv, x.s));
}

SubgroupTag::SubgroupTag(GroupKind k, std::size_t n_, std::size_t q_) : kind(k), n(n_), q(q_) {
  require(n >= 1, "subgroup tag needs n >= 1");
  require(q <= n, "subgroup tag needs 0 <= q <= n");
}

std::string to_string(GroupKind k) {
  switch (k) {
    case GroupKind::SLpm: return "SLpm";
    case GroupKind::O: return "O";
    case GroupKind::CO: return "CO";
    case GroupKind::H: return "H";
    case GroupKind::GL: return "GL";
  }
  return "?";
}

GroupKind parse_group_kind(const std::string& name) {
  if (name == "SLpm" || name == "SL") return GroupKind::SLpm;
  if (name == "O") return GroupKind::O;
  if (name == "CO") return GroupKind::CO;
  if (name == "H") return GroupKind::H;
  if (name == "GL") return GroupKind::GL;
  throw InvalidArgument("unknown subgroup tag \"" + name + "\"");
}

RatMatrix eta(std::size_t n, std::size_t q) {
  require(q <= n, "eta: q must not exceed n");
  RatMatrix e(n, n);
  for (std::size_t i = 0; i < n; ++i) e(i, i) = i < q ? -1 : 1;
  return e;
}

Membership subgroup_member(const GL1Element& a, const SubgroupTag& tag) {
  const std::size_t n = a.dim();
  if (tag.n != n) throw InvalidArgument("subgroup tag dimension does not match the matrix");
  const RatMatrix& m = a.matrix();
  Membership out;
  switch (tag.kind) {
    case GroupKind::GL:
      out.member = true;
      out.certificate = a.det();
      break;
    case GroupKind::SLpm:
      out.certificate = abs(a.det());
      out.member = *out.certificate == 1;
      break;
    case GroupKind::H: {
      Rational k = m(0, 0);
      out.member = k > 0 && m == RatMatrix::identity(n) * k;
      if (out.member) out.certificate = k;
      break;
    }
    case GroupKind::O:
    case GroupKind::CO: {
      const RatMatrix e = eta(n, tag.q);
      const RatMatrix form = m.transpose() * e * m;
      Rational k = form(0, 0) / e(0, 0);
      bool conformal = k > 0 && form == e * k;
      out.member = tag.kind == GroupKind::CO ? conformal : (conformal && k == 1);
      if (out.member) out.certificate = k;
      break;
    }
  }
  return out;
}

SlCoFactor factor_sl_co(const GL1Element& a, std::size_t q) {
  const std::size_t n = a.dim();
  require(q <= n, "factor_sl_co: q must not exceed n");
  SlCoFactor out;
  out.scale = rational_power(abs(a.det()), 1, static_cast<unsigned>(n));
  if (out.scale.exact) {
    const Rational& c = *out.scale.exact;
    out.c_exact = RatMatrix::identity(n) * c;
    out.s_exact = a.matrix() * (Rational(1) / c);
    out.c = to_real(*out.c_exact);
    out.s = to_real(*out.s_exact);
  } else {
    const double c = out.scale.value;
    out.c = RealMatrix::identity(n) * c;
    out.s = to_real(a.matrix()) * (1.0 / c);
  }
  return out;
}

IntersectionVerdict sl_co_intersection_check(const GL1Element& a, std::size_t q) {
  const std::size_t n = a.dim();
  IntersectionVerdict v;
  v.in_intersection = subgroup_member(a, {GroupKind::SLpm, n}).member &&
                      subgroup_member(a, {GroupKind::CO, n, q}).member;
  v.in_orthogonal = subgroup_member(a, {GroupKind::O, n, q}).member;
  return v;
}

namespace {

Rational small_rational(std::mt19937_64& rng, int max_num, int max_den) {
  std::uniform_int_distribution<int> num(-max_num, max_num);
  std::uniform_int_distribution<int> den(1, max_den);
  Rational r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

Rational positive_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(1, 6);
  std::uniform_int_distribution<int> den(1, 4);
  Rational r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

// product of elementary shears: determinant exactly 1
RatMatrix unimodular(std::size_t n, std::mt19937_64& rng) {
  RatMatrix m = RatMatrix::identity(n);
  if (n < 2) return m;
  std::uniform_int_distribution<std::size_t> idx(0, n - 1);
  for (std::size_t step = 0; step < 2 * n; ++step) {
    std::size_t i = idx(rng), j = idx(rng);
    if (i == j) continue;
    RatMatrix e = RatMatrix::identity(n);
    e(i, j) = small_rational(rng, 3, 2);
    m = m * e;
  }
  return m;
}

RatMatrix pseudo_orthogonal(std::size_t n, std::size_t q, std::mt19937_64& rng) {
  RatMatrix m = RatMatrix::identity(n);
  std::uniform_int_distribution<std::size_t> idx(0, n - 1);
  std::uniform_int_distribution<int> coin(0, 1);
  for (std::size_t step = 0; n >= 2 && step < 2 * n; ++step) {
    std::size_t i = idx(rng), j = idx(rng);
    if (i == j) continue;
    RatMatrix r = RatMatrix::identity(n);
    if ((i < q) == (j < q)) {
      // rotation: cos = (1-t²)/(1+t²), sin = 2t/(1+t²)
      Rational t = small_rational(rng, 4, 3);
      Rational c = (1 - t * t) / (1 + t * t), s = 2 * t / (1 + t * t);
      r(i, i) = c, r(i, j) = -s, r(j, i) = s, r(j, j) = c;
    } else {
      // boost: cosh = (1+t²)/(1-t²), sinh = 2t/(1-t²), 0 < |t| < 1
      std::uniform_int_distribution<int> den(2, 6);
      int d = den(rng);
      std::uniform_int_distribution<int> num(1, d - 1);
      Rational t(num(rng) * (coin(rng) ? 1 : -1), d);
      t.canonicalize();
      Rational ch = (1 + t * t) / (1 - t * t), sh = 2 * t / (1 - t * t);
      r(i, i) = ch, r(i, j) = sh, r(j, i) = sh, r(j, j) = ch;
    }
    m = m * r;
  }
  if (coin(rng)) {
    std::size_t i = idx(rng);
    for (std::size_t k = 0; k < n; ++k) m(k, i) = -m(k, i);
  }
  return m;
}

}  // namespace

GL1Element sample_member(const SubgroupTag& tag, std::mt19937_64& rng) {
  const std::size_t n = tag.n;
  std::uniform_int_distribution<int> coin(0, 1);
  switch (tag.kind) {
    case GroupKind::SLpm: {
      RatMatrix m = unimodular(n, rng);
      if (coin(rng))
        for (std::size_t k = 0; k < n; ++k) m(k, 0) = -m(k, 0);
      return GL1Element(std::move(m));
    }
    case GroupKind::O: return GL1Element(pseudo_orthogonal(n, tag.q, rng));
    case GroupKind::CO: return GL1Element(pseudo_orthogonal(n, tag.q, rng) * positive_rational(rng));
    case GroupKind::H: return GL1Element(RatMatrix::identity(n) * positive_rational(rng));
    case GroupKind::GL: {
      for (;;) {
        RatMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j) m(i, j) = small_rational(rng, 4, 3);
        if (!is_zero(determinant(m))) return GL1Element(std::move(m));
      }
    }
  }
  throw InvalidArgument("unknown subgroup kind");
}

}  // namespace gstruct
