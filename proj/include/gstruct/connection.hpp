#pragma once

#include <optional>

#include "gstruct/jet.hpp"
#include "gstruct/polynomial.hpp"
#include "gstruct/structures.hpp"

namespace gstruct {

using Covector = std::vector<Rational>;

/// Symmetric n×n matrix of polynomials in n chart coordinates.
class PolyMetricField {
public:
  /// `entries` is row-major n×n; throws InvalidArgument unless symmetric
  /// with every entry in n variables.
  PolyMetricField(std::size_t n, std::vector<Polynomial> entries,
                  std::optional<std::size_t> declared_q = std::nullopt);

  /// Constant field g(x) = g0.
  static PolyMetricField constant(const RatMatrix& g0);

  std::size_t dim() const { return n_; }
  const Polynomial& entry(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
  std::optional<std::size_t> declared_q() const { return q_; }

  /// g(x); throws DomainError when degenerate at x (or when the declared
  /// signature does not hold there).
  RatMatrix value_at(const Point& x) const;
  /// ∂_k g(x) for k = 0..n-1.
  std::vector<RatMatrix> derivatives_at(const Point& x) const;

private:
  std::size_t n_;
  std::vector<Polynomial> entries_;
  std::optional<std::size_t> q_;
};

struct PolyVolumeField {
  Polynomial v;
};

/// Packed Γ^i_{jk} (upper-jk layout) with polynomial entries.
struct PolyConnectionField {
  std::size_t n = 0;
  std::vector<Polynomial> entries;
};

/// ∇_k g_{ij}, indexed (k, i, j).
class CovariantDerivative {
public:
  explicit CovariantDerivative(std::size_t n) : n_(n), data_(n * n * n, Rational(0)) {}
  std::size_t dim() const { return n_; }
  Rational& operator()(std::size_t k, std::size_t i, std::size_t j) { return data_[(k * n_ + i) * n_ + j]; }
  const Rational& operator()(std::size_t k, std::size_t i, std::size_t j) const {
    return data_[(k * n_ + i) * n_ + j];
  }
  const std::vector<Rational>& data() const { return data_; }
  bool is_zero() const;

private:
  std::size_t n_;
  std::vector<Rational> data_;
};

/// Γ^i_{jk} = ½ g^{il}(∂_j g_{lk} + ∂_k g_{lj} − ∂_l g_{jk}) at x, exact.
Sym2Tensor levi_civita_at(const PolyMetricField& g, const Point& x);

/// ∇_k g_{ij} = ∂_k g_{ij} − Γ^l_{ki} g_{lj} − Γ^l_{kj} g_{il}
CovariantDerivative metric_cov_deriv_at(const Sym2Tensor& gamma, const PolyMetricField& g, const Point& x);

/// a⁻¹Γ(a,a) + s: the value of the connection at the transformed 2-frame.
Sym2Tensor connection_transform(const Sym2Tensor& gamma, const Jet2& j);

/// μ with Γ2 − Γ1 = δμ + μδ, if the difference has that form.
std::optional<Covector> projective_difference(const Sym2Tensor& gamma1, const Sym2Tensor& gamma2);

/// Γ'^i_{jk} = Γ^i_{jk} + δ^i_j μ_k + δ^i_k μ_j
Sym2Tensor projective_shift(const Sym2Tensor& gamma, const Covector& mu);

/// residual_i = ∂_i v − v Σ_k Γ^k_{ki}; throws DomainError when v(x) <= 0.
Covector volume_parallel_residual(const Sym2Tensor& gamma, const PolyVolumeField& vol, const Point& x);

struct EquiaffineResult {
  Sym2Tensor gamma;
  Covector mu;
};

/// The unique projective shift of Γ making the volume parallel at x.
EquiaffineResult equiaffine_representative(const Sym2Tensor& gamma, const PolyVolumeField& vol,
                                           const Point& x);

/// Levi-Civita plus δ^i_j θ_k + δ^i_k θ_j − g_{jk} g^{is} θ_s, so that
/// ∇_k g_{ij} = −2 θ_k g_{ij}.
Sym2Tensor weyl_connection_at(const PolyMetricField& g, const Covector& theta, const Point& x);

/// θ with ∇_k g_{ij} = −2 θ_k g_{ij} at x, if Γ is Weyl-compatible there.
std::optional<Covector> weyl_compatibility_check(const Sym2Tensor& gamma, const PolyMetricField& g,
                                                 const Point& x);

struct WeylIntersection {
  Covector mu;     ///< projective shift making Γ compatible
  Covector theta;  ///< Weyl 1-form of the shifted connection
};

/// Solves ∇_k g_{ij} = μ_i g_{kj} + μ_j g_{ik} + 2(μ_k − θ_k) g_{ij} exactly.
std::optional<WeylIntersection> weyl_intersection_at(const Sym2Tensor& gamma, const PolyMetricField& g,
                                                     const Point& x);

Sym2Tensor poly_connection_eval(const PolyConnectionField& field, const Point& x);

}  // namespace gstruct
