#pragma once

#include <optional>
#include <random>
#include <string>

#include "gstruct/sym2.hpp"

namespace gstruct {

/// An element a of G¹ₙ ≅ GL(n): an invertible rational matrix.
class GL1Element {
public:
  /// Throws DomainError when `m` is singular, InvalidArgument when not square.
  explicit GL1Element(RatMatrix m);

  static GL1Element identity(std::size_t n) { return GL1Element(RatMatrix::identity(n)); }

  std::size_t dim() const { return m_.rows(); }
  const RatMatrix& matrix() const { return m_; }
  const Rational& det() const { return det_; }
  const RatMatrix& inverse() const { return inv_; }

  friend GL1Element operator*(const GL1Element& a, const GL1Element& b) {
    return GL1Element(a.m_ * b.m_);
  }
  friend bool operator==(const GL1Element& a, const GL1Element& b) { return a.m_ == b.m_; }

private:
  RatMatrix m_;
  Rational det_;
  RatMatrix inv_;
};

/// (a, s) in G²ₙ ≅ G¹ₙ ⋊ S²ₙ.
struct Jet2 {
  GL1Element a;
  Sym2Tensor s;

  Jet2(GL1Element a_, Sym2Tensor s_);
  static Jet2 identity(std::size_t n) { return {GL1Element::identity(n), Sym2Tensor(n)}; }
  std::size_t dim() const { return a.dim(); }

  friend bool operator==(const Jet2& x, const Jet2& y) { return x.a == y.a && x.s == y.s; }
};

/// result^i_{jk} = Σ (b⁻¹)^i_l s^l_{mp} b^m_j b^p_k  (the term b⁻¹s(b,b)).
Sym2Tensor sym2_transport(const GL1Element& b, const Sym2Tensor& s);

/// (a,s)(b,t) = (ab, b⁻¹s(b,b) + t)
Jet2 jet2_mul(const Jet2& x, const Jet2& y);
Jet2 jet2_inv(const Jet2& x);

enum class GroupKind { SLpm, O, CO, H, GL };

/// One of the first-order subgroups of G¹ₙ. q counts the minus signs of
/// η = diag(-I_q, I_{n-q}) and is ignored for SLpm, H and GL.
struct SubgroupTag {
  GroupKind kind = GroupKind::GL;
  std::size_t n = 0;
  std::size_t q = 0;

  SubgroupTag(GroupKind k, std::size_t n_, std::size_t q_ = 0);
};

std::string to_string(GroupKind k);
GroupKind parse_group_kind(const std::string& name);

/// η = diag(-I_q, I_{n-q})
RatMatrix eta(std::size_t n, std::size_t q);

struct Membership {
  bool member = false;
  /// Scale k of aᵗηa = kη (CO, O) or a = kI (H); |det a| for SLpm.
  std::optional<Rational> certificate;
};

Membership subgroup_member(const GL1Element& a, const SubgroupTag& tag);

/// a = s·c with |det s| = 1 and c = |det a|^{1/n}·I ∈ Hₙ ⊂ CO.
struct SlCoFactor {
  RootScalar scale;  ///< |det a|^{1/n}
  RealMatrix s;
  RealMatrix c;
  std::optional<RatMatrix> s_exact;  ///< set when the scale is rational
  std::optional<RatMatrix> c_exact;
};

SlCoFactor factor_sl_co(const GL1Element& a, std::size_t q);

struct IntersectionVerdict {
  bool in_intersection = false;  ///< a ∈ SL± and a ∈ CO
  bool in_orthogonal = false;    ///< a ∈ O, computed independently
  bool consistent() const { return in_intersection == in_orthogonal; }
};

/// Decides a ∈ SL± ∩ CO(q, n-q) and cross-checks against O(q, n-q) membership.
IntersectionVerdict sl_co_intersection_check(const GL1Element& a, std::size_t q);

/// Random rational element of the tagged group: products of elementary
/// matrices (SLpm, GL), rational rotations and boosts in coordinate planes
/// (O), scaled by a positive rational for CO and H.
GL1Element sample_member(const SubgroupTag& tag, std::mt19937_64& rng);

}  // namespace gstruct
