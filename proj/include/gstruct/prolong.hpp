#pragma once

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "gstruct/jet.hpp"

namespace gstruct {

/// A linear subspace 𝔤 ⊂ 𝔤𝔩(n) given by linearly independent matrices.
class LieSubalgebra {
public:
  /// Throws InvalidArgument when the basis is dependent or has the wrong shape.
  LieSubalgebra(std::size_t n, std::vector<RatMatrix> basis, std::string name);

  std::size_t n() const { return n_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<RatMatrix>& basis() const { return basis_; }
  const std::string& name() const { return name_; }

  /// Basis matrices flattened row-major to vectors of length n².
  std::vector<RatVector> flattened() const;

  /// [M_a, M_b] ∈ span(basis) for every pair.
  bool closed_under_bracket() const;

private:
  std::size_t n_;
  std::vector<RatMatrix> basis_;
  std::string name_;
};

/// Parameters selecting one of the builtin algebras.
///
///   gl     all of 𝔤𝔩(n)
///   sl     traceless matrices
///   o      {M : Mᵗη + ηM = 0}, η = diag(-I_q, I_{n-q})
///   co     𝔬 ⊕ span(I)
///   glW    {M : M e₁ ∈ span(e₁)}
///   glWc   {M ∈ glW : M¹₁ = c·φ(M)}, φ(M) = Σ coupling_ij M_ij (trace by default)
///   csp    {M : MᵗJ + JM = λJ}, n = 4, J the standard symplectic form
struct AlgebraSpec {
  std::string name;
  std::size_t n = 0;
  std::size_t q = 0;
  Rational c = 0;
  std::optional<RatMatrix> coupling;
};

LieSubalgebra builtin_algebra(const AlgebraSpec& spec);

/// {M : MᵗG + GM = 0} for a nondegenerate symmetric form G.
LieSubalgebra orthogonal_algebra(const RatMatrix& form);
/// {M : MᵗG + GM = λG}
LieSubalgebra conformal_algebra(const RatMatrix& form);

/// 𝔤ₖ: totally symmetric (k+1)-linear maps ℝⁿ×…×ℝⁿ → ℝⁿ.
///
/// An element is a packed coefficient vector of length n·C(n+k, k+1): block i
/// (upper index) holds the lower multi-indices in SymmetricIndex(n, k+1)
/// order. For degree 1 the packing equals Sym2Tensor's upper-jk packing.
struct ProlongSpace {
  std::size_t n = 0;
  std::size_t degree = 1;
  std::vector<RatVector> basis;

  std::size_t dim() const { return basis.size(); }
  std::size_t width() const { return n * multiset_count(n, degree + 1); }

  /// Basis element b as a Sym2Tensor; degree 1 only.
  Sym2Tensor element(std::size_t b) const;
};

ProlongSpace first_prolongation(const LieSubalgebra& g);

/// 𝔤ₖ: every slice obtained by fixing k lower indices lies in 𝔤, which is
/// the same as requiring every degree-lowering slice to lie in 𝔤_{k-1}.
ProlongSpace kth_prolongation(const LieSubalgebra& g, std::size_t k);

struct TypeReport {
  std::vector<std::size_t> dims;  ///< dim 𝔤₁, dim 𝔤₂, …
  std::optional<std::size_t> finite_type;
  std::size_t k_max = 0;

  /// "finite-type-k" or "type>k_max".
  std::string verdict() const;
};

TypeReport finite_type_order(const LieSubalgebra& g, std::size_t k_max = 4);

/// s^i_{jk} = δ^i_j μ_k + δ^i_k μ_j − Σ_s G^{is} G_{jk} μ_s for the form G.
Sym2Tensor co1_formula_element(const RatMatrix& form, const RatVector& mu);

/// Span of co1_formula_element(η, e_m*), m = 1..n.
ProlongSpace co1_formula_basis(std::size_t n, std::size_t q);
ProlongSpace co1_formula_basis(const RatMatrix& form);

/// s^i_{jk} = δ^i_j μ_k + μ_j δ^i_k
Sym2Tensor projective_element(const RatVector& mu);
ProlongSpace projective_subspace(std::size_t n);

struct ClosureVerdict {
  bool ok = true;
  std::size_t checked = 0;  ///< number of (b, s) pairs tested
  std::size_t failures = 0;
};

/// Checks sym2_transport(b, s) ∈ span(𝔤₁) for the identity plus `samples`
/// random members b of the tagged group and every basis element s.
ClosureVerdict semidirect_closure_check(const SubgroupTag& tag, const ProlongSpace& g1,
                                        std::size_t samples, std::mt19937_64& rng);

/// Packed coordinates of a Sym2Tensor (the ProlongSpace degree-1 layout).
inline const RatVector& packed_vector(const Sym2Tensor& s) { return s.packed(); }

}  // namespace gstruct
