#include "gstruct/structures.hpp"

#include <cmath>

namespace gstruct {

namespace {

RatMatrix exact_from_real(const RealMatrix& m) {
  RatMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (!std::isfinite(m(i, j))) throw InvalidArgument("non-finite matrix entry");
      out(i, j) = Rational(m(i, j));  // every double is an exact dyadic rational
    }
  return out;
}

}  // namespace

Signature metric_signature(const RatMatrix& g) {
  Inertia in = congruence_diagonalize(g);
  if (in.zero > 0) throw DomainError("degenerate symmetric matrix is not a metric");
  return {in.negative, in.positive};
}

MetricValue::MetricValue(RatMatrix g) : g_(std::move(g)) {
  require(g_.square() && g_.rows() >= 1, "metric must be a nonempty square matrix");
  if (!g_.symmetric()) throw InvalidArgument("metric must be symmetric");
  sig_ = metric_signature(g_);
  det_ = determinant(g_);
}

MetricValue::MetricValue(RatMatrix g, std::size_t declared_q) : MetricValue(std::move(g)) {
  if (sig_.q != declared_q)
    throw DomainError("declared signature q = " + std::to_string(declared_q) +
                      " but the metric has q = " + std::to_string(sig_.q));
}

ConformalRep ConformalRep::from_exact(const RatMatrix& m) {
  MetricValue mv(m);
  return {to_real(m), m, m, mv.signature()};
}

ConformalRep ConformalRep::from_real(const RealMatrix& m) {
  require(m.square() && m.rows() >= 1, "conformal representative must be square");
  RatMatrix d = exact_from_real(m);
  MetricValue mv(d);
  return {m, std::nullopt, std::move(d), mv.signature()};
}

ConformalRep ConformalRep::scaled(const Rational& lambda) const {
  if (lambda <= 0) throw DomainError("conformal rescaling needs a positive factor");
  ConformalRep out = *this;
  out.r = r * to_double(lambda);
  if (exact) out.exact = *exact * lambda;
  if (direction) out.direction = *direction * lambda;
  return out;
}

VolumeDensityValue VolumeDensityValue::from_square(const Rational& v2) {
  if (v2 <= 0) throw DomainError("volume density must be positive");
  VolumeDensityValue out;
  out.v2_exact = v2;
  out.v_exact = exact_root(v2, 2);
  out.v = out.v_exact ? to_double(*out.v_exact) : std::sqrt(to_double(v2));
  return out;
}

VolumeDensityValue VolumeDensityValue::from_exact(const Rational& v) {
  if (v <= 0) throw DomainError("volume density must be positive");
  return {to_double(v), v, Rational(v * v)};
}

VolumeDensityValue VolumeDensityValue::from_real(double v) {
  if (!(v > 0) || !std::isfinite(v)) throw DomainError("volume density must be positive");
  return {v, std::nullopt, std::nullopt};
}

MetricDecomposition decompose_metric(const MetricValue& g) {
  const std::size_t n = g.dim();
  const Rational adet = abs(g.det());
  MetricDecomposition out{ConformalRep{}, VolumeDensityValue::from_square(adet)};
  RootScalar scale = rational_power(adet, 1, static_cast<unsigned>(n));
  out.rep.signature = g.signature();
  out.rep.direction = g.g();
  if (scale.exact) {
    RatMatrix r = g.g() * (Rational(1) / *scale.exact);
    out.rep.r = to_real(r);
    out.rep.exact = std::move(r);
  } else {
    out.rep.r = to_real(g.g()) * (1.0 / scale.value);
  }
  return out;
}

RecomposedMetric recompose_metric(const ConformalRep& rep, const VolumeDensityValue& vol) {
  const std::size_t n = rep.dim();
  require(n >= 1, "empty conformal representative");
  const unsigned un = static_cast<unsigned>(n);
  RecomposedMetric out;
  out.signature = rep.signature;

  const RatMatrix d = rep.direction ? *rep.direction : rep.exact ? *rep.exact : exact_from_real(rep.r);
  const Rational adet = abs(determinant(d));
  if (is_zero(adet)) throw DomainError("conformal representative is degenerate");

  if (vol.v2_exact) {
    RootScalar scale = rational_power(*vol.v2_exact / adet, 1, un);
    if (scale.exact) {
      RatMatrix g = d * *scale.exact;
      out.g = to_real(g);
      out.exact = std::move(g);
    } else {
      out.g = to_real(d) * scale.value;
    }
    return out;
  }
  // v known only in floating point: v^{2/n} |det d|^{-1/n}
  double scale = std::pow(vol.v, 2.0 / static_cast<double>(n)) * rational_power(adet, -1, un).value;
  out.g = to_real(d) * scale;
  return out;
}

std::optional<Rational> conformal_equivalent(const RatMatrix& g1, const RatMatrix& g2) {
  require(g1.rows() == g2.rows() && g1.cols() == g2.cols(), "metrics of different dimension");
  std::optional<Rational> lambda;
  for (std::size_t i = 0; i < g1.rows(); ++i)
    for (std::size_t j = 0; j < g1.cols(); ++j) {
      const Rational& a = g1(i, j);
      const Rational& b = g2(i, j);
      if (is_zero(a)) {
        if (!is_zero(b)) return std::nullopt;
        continue;
      }
      Rational ratio = b / a;
      if (!lambda) lambda = ratio;
      else if (*lambda != ratio) return std::nullopt;
    }
  if (!lambda || *lambda <= 0) return std::nullopt;
  return lambda;
}

RootScalar volume_equivariant_value(const VolumeDensityValue& vol, const FrameValue& l) {
  const unsigned n = static_cast<unsigned>(l.dim());
  const Rational adet = abs(l.det());
  if (vol.v_exact) return rational_power(*vol.v_exact * adet, -1, n);
  if (vol.v2_exact) return rational_power(*vol.v2_exact * adet * adet, -1, 2 * n);
  return {std::pow(vol.v * to_double(adet), -1.0 / n), std::nullopt};
}

}  // namespace gstruct
