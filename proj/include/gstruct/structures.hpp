#pragma once

#include <optional>

#include "gstruct/jet.hpp"

namespace gstruct {

struct Signature {
  std::size_t q = 0;  ///< negative directions
  std::size_t p = 0;  ///< positive directions
  friend bool operator==(const Signature&, const Signature&) = default;
};

/// A nondegenerate symmetric g_{ij} at a point.
class MetricValue {
public:
  /// Signature is computed; throws DomainError if g is degenerate.
  explicit MetricValue(RatMatrix g);
  /// Throws DomainError if the declared q disagrees with the inertia of g.
  MetricValue(RatMatrix g, std::size_t declared_q);

  std::size_t dim() const { return g_.rows(); }
  const RatMatrix& g() const { return g_; }
  Signature signature() const { return sig_; }
  const Rational& det() const { return det_; }

private:
  RatMatrix g_;
  Signature sig_;
  Rational det_;
};

/// Representative of a conformal class. Held in floating point, with the
/// exact rational matrix when one is available.
struct ConformalRep {
  RealMatrix r;
  std::optional<RatMatrix> exact;
  /// A rational matrix positively proportional to r. Recomposition works
  /// from it so that |det| is exact even when r itself is rounded.
  std::optional<RatMatrix> direction;
  Signature signature;

  static ConformalRep from_exact(const RatMatrix& m);
  /// Throws DomainError for singular or non-symmetric input.
  static ConformalRep from_real(const RealMatrix& m);
  /// λ·rep for λ > 0: the same conformal class.
  ConformalRep scaled(const Rational& lambda) const;
  std::size_t dim() const { return r.rows(); }
};

/// A positive volume density v at a point. v² is kept exactly when known.
struct VolumeDensityValue {
  double v = 0.0;
  std::optional<Rational> v_exact;
  std::optional<Rational> v2_exact;

  static VolumeDensityValue from_square(const Rational& v2);
  static VolumeDensityValue from_exact(const Rational& v);
  static VolumeDensityValue from_real(double v);
};

/// Frame l ∈ LM at a point; columns are the frame vectors in chart coordinates.
using FrameValue = GL1Element;

/// Sylvester inertia; throws DomainError when g is degenerate.
Signature metric_signature(const RatMatrix& g);

struct MetricDecomposition {
  ConformalRep rep;         ///< g / |det g|^{1/n}, |det rep| = 1
  VolumeDensityValue vol;   ///< |det g|^{1/2}
};

MetricDecomposition decompose_metric(const MetricValue& g);

/// The metric (v²/|det r|)^{1/n} · r: the member of the conformal class of r
/// whose volume density is v.
struct RecomposedMetric {
  RealMatrix g;
  std::optional<RatMatrix> exact;
  Signature signature;
};

RecomposedMetric recompose_metric(const ConformalRep& rep, const VolumeDensityValue& vol);

/// λ > 0 with g2 = λ·g1, if any.
std::optional<Rational> conformal_equivalent(const RatMatrix& g1, const RatMatrix& g2);

/// f(l) = (v·|det l|)^{-1/n}; satisfies f(l a) = |det a|^{-1/n} f(l).
RootScalar volume_equivariant_value(const VolumeDensityValue& vol, const FrameValue& l);

}  // namespace gstruct
