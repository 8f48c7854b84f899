#include "gstruct/connection.hpp"

#include <algorithm>

#include "gstruct/prolong.hpp"

namespace gstruct {

PolyMetricField::PolyMetricField(std::size_t n, std::vector<Polynomial> entries,
                                 std::optional<std::size_t> declared_q)
    : n_(n), entries_(std::move(entries)), q_(declared_q) {
  require(n_ >= 1, "metric field needs n >= 1");
  require(entries_.size() == n_ * n_, "metric field needs n*n entries");
  for (const auto& p : entries_) require(p.variables() == n_, "metric entries must be polynomials in n variables");
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j)
      require(entry(i, j) == entry(j, i), "metric field must be symmetric");
  if (q_) require(*q_ <= n_, "declared q must not exceed n");
}

PolyMetricField PolyMetricField::constant(const RatMatrix& g0) {
  const std::size_t n = g0.rows();
  std::vector<Polynomial> e;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) e.push_back(Polynomial::constant(n, g0(i, j)));
  return PolyMetricField(n, std::move(e));
}

RatMatrix PolyMetricField::value_at(const Point& x) const {
  require(x.size() == n_, "point dimension does not match the metric field");
  RatMatrix g(n_, n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) g(i, j) = entry(i, j).evaluate(x);
  if (is_zero(determinant(g))) throw DomainError("metric is degenerate at the given point");
  if (q_) MetricValue(g, *q_);
  return g;
}

std::vector<RatMatrix> PolyMetricField::derivatives_at(const Point& x) const {
  require(x.size() == n_, "point dimension does not match the metric field");
  std::vector<RatMatrix> d(n_, RatMatrix(n_, n_));
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i; j < n_; ++j) {
      auto vg = poly_eval_grad(entry(i, j), x);
      for (std::size_t k = 0; k < n_; ++k) {
        d[k](i, j) = vg.gradient[k];
        d[k](j, i) = vg.gradient[k];
      }
    }
  return d;
}

bool CovariantDerivative::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& r) { return gstruct::is_zero(r); });
}

Sym2Tensor levi_civita_at(const PolyMetricField& g, const Point& x) {
  const std::size_t n = g.dim();
  const RatMatrix ginv = inverse(g.value_at(x));
  const auto dg = g.derivatives_at(x);
  Sym2Tensor out(n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = j; k < n; ++k) {
      // lowered Γ_{l jk}
      RatVector lowered(n);
      for (std::size_t l = 0; l < n; ++l) lowered[l] = (dg[j](l, k) + dg[k](l, j) - dg[l](j, k)) / 2;
      for (std::size_t i = 0; i < n; ++i) {
        Rational acc = 0;
        for (std::size_t l = 0; l < n; ++l) acc += ginv(i, l) * lowered[l];
        out.set(i, j, k, std::move(acc));
      }
    }
  return out;
}

CovariantDerivative metric_cov_deriv_at(const Sym2Tensor& gamma, const PolyMetricField& g, const Point& x) {
  const std::size_t n = g.dim();
  require(gamma.dim() == n, "connection and metric dimensions differ");
  const RatMatrix gx = g.value_at(x);
  const auto dg = g.derivatives_at(x);
  CovariantDerivative out(n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Rational v = dg[k](i, j);
        for (std::size_t l = 0; l < n; ++l) v -= gamma(l, k, i) * gx(l, j) + gamma(l, k, j) * gx(i, l);
        out(k, i, j) = std::move(v);
      }
  return out;
}

Sym2Tensor connection_transform(const Sym2Tensor& gamma, const Jet2& j) {
  require(gamma.dim() == j.dim(), "connection and jet dimensions differ");
  return sym2_transport(j.a, gamma) + j.s;
}

Sym2Tensor projective_shift(const Sym2Tensor& gamma, const Covector& mu) {
  require(mu.size() == gamma.dim(), "covector length does not match the connection");
  return gamma + projective_element(mu);
}

std::optional<Covector> projective_difference(const Sym2Tensor& gamma1, const Sym2Tensor& gamma2) {
  const std::size_t n = gamma1.dim();
  require(gamma2.dim() == n, "connections of different dimension");
  const Sym2Tensor d = gamma2 - gamma1;
  // contracting δ^i_j μ_k + δ^i_k μ_j over i = j gives (n+1) μ_k
  Covector mu(n, Rational(0));
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) mu[k] += d(i, i, k);
    mu[k] /= static_cast<long>(n + 1);
  }
  if (!(projective_element(mu) == d)) return std::nullopt;
  return mu;
}

namespace {

Rational positive_volume_at(const PolyVolumeField& vol, const Point& x, std::vector<Rational>* grad) {
  auto vg = poly_eval_grad(vol.v, x);
  if (vg.value <= 0) throw DomainError("volume density must be positive at the given point");
  if (grad) *grad = std::move(vg.gradient);
  return vg.value;
}

Rational trace_component(const Sym2Tensor& gamma, std::size_t i) {
  Rational t = 0;
  for (std::size_t k = 0; k < gamma.dim(); ++k) t += gamma(k, k, i);
  return t;
}

}  // namespace

Covector volume_parallel_residual(const Sym2Tensor& gamma, const PolyVolumeField& vol, const Point& x) {
  const std::size_t n = gamma.dim();
  require(x.size() == n && vol.v.variables() == n, "volume, connection and point dimensions differ");
  std::vector<Rational> grad;
  Rational v = positive_volume_at(vol, x, &grad);
  Covector r(n);
  for (std::size_t i = 0; i < n; ++i) r[i] = grad[i] - v * trace_component(gamma, i);
  return r;
}

EquiaffineResult equiaffine_representative(const Sym2Tensor& gamma, const PolyVolumeField& vol,
                                           const Point& x) {
  const std::size_t n = gamma.dim();
  require(x.size() == n && vol.v.variables() == n, "volume, connection and point dimensions differ");
  std::vector<Rational> grad;
  Rational v = positive_volume_at(vol, x, &grad);
  Covector mu(n);
  for (std::size_t i = 0; i < n; ++i)
    mu[i] = (grad[i] / v - trace_component(gamma, i)) / static_cast<long>(n + 1);
  return {projective_shift(gamma, mu), mu};
}

Sym2Tensor weyl_connection_at(const PolyMetricField& g, const Covector& theta, const Point& x) {
  const std::size_t n = g.dim();
  require(theta.size() == n, "θ length does not match the metric");
  return levi_civita_at(g, x) + co1_formula_element(g.value_at(x), theta);
}

std::optional<Covector> weyl_compatibility_check(const Sym2Tensor& gamma, const PolyMetricField& g,
                                                 const Point& x) {
  const std::size_t n = g.dim();
  const RatMatrix gx = g.value_at(x);
  const RatMatrix ginv = inverse(gx);
  const CovariantDerivative nabla = metric_cov_deriv_at(gamma, g, x);
  Covector theta(n, Rational(0));
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) theta[k] += ginv(i, j) * nabla(k, i, j);
    theta[k] /= -2 * static_cast<long>(n);
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (nabla(k, i, j) != -2 * theta[k] * gx(i, j)) return std::nullopt;
  return theta;
}

std::optional<WeylIntersection> weyl_intersection_at(const Sym2Tensor& gamma, const PolyMetricField& g,
                                                     const Point& x) {
  const std::size_t n = g.dim();
  const RatMatrix gx = g.value_at(x);
  const CovariantDerivative nabla = metric_cov_deriv_at(gamma, g, x);
  // unknowns: μ_0..μ_{n-1}, θ_0..θ_{n-1}; one row per (k, i <= j)
  const std::size_t rows = n * n * (n + 1) / 2;
  RatMatrix a(rows, 2 * n);
  RatVector b(rows);
  std::size_t r = 0;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j, ++r) {
        a(r, i) += gx(k, j);
        a(r, j) += gx(i, k);
        a(r, k) += 2 * gx(i, j);
        a(r, n + k) -= 2 * gx(i, j);
        b[r] = nabla(k, i, j);
      }
  auto sol = solve(a, b);
  if (!sol) return std::nullopt;
  WeylIntersection out;
  out.mu.assign(sol->begin(), sol->begin() + static_cast<long>(n));
  out.theta.assign(sol->begin() + static_cast<long>(n), sol->end());
  return out;
}

Sym2Tensor poly_connection_eval(const PolyConnectionField& field, const Point& x) {
  const std::size_t n = field.n;
  require(field.entries.size() == n * Sym2Tensor::packed_size(n), "connection field has the wrong packed length");
  require(x.size() == n, "point dimension does not match the connection field");
  std::vector<Rational> packed;
  packed.reserve(field.entries.size());
  for (const auto& p : field.entries) {
    require(p.variables() == n, "connection entries must be polynomials in n variables");
    packed.push_back(p.evaluate(x));
  }
  return Sym2Tensor(n, std::move(packed));
}

}  // namespace gstruct
