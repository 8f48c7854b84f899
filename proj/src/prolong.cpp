#include "gstruct/prolong.hpp"

namespace gstruct {

namespace {

RatVector flatten(const RatMatrix& m) { return m.data(); }

RatMatrix unflatten(const RatVector& v, std::size_t n) { return RatMatrix(n, n, v); }

// Kernel of a linear condition system on vec(M), as matrices.
std::vector<RatMatrix> matrices_satisfying(const RatMatrix& conditions, std::size_t n) {
  std::vector<RatMatrix> out;
  for (auto& v : nullspace_vectors(conditions)) out.push_back(unflatten(v, n));
  return out;
}

// Rows (MᵗG + GM)_{ij} for i <= j, optionally with an extra column holding -G_{ij}
// for the conformal multiplier λ.
RatMatrix form_conditions(const RatMatrix& form, bool with_multiplier) {
  const std::size_t n = form.rows();
  const std::size_t nn = n * n;
  RatMatrix rows(n * (n + 1) / 2, nn + (with_multiplier ? 1 : 0));
  std::size_t r = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j, ++r) {
      for (std::size_t l = 0; l < n; ++l) {
        rows(r, l * n + i) += form(l, j);  // M_{li} G_{lj}
        rows(r, l * n + j) += form(i, l);  // G_{il} M_{lj}
      }
      if (with_multiplier) rows(r, nn) = -form(i, j);
    }
  return rows;
}

void check_form(const RatMatrix& form) {
  require(form.square() && form.rows() >= 1, "bilinear form must be a nonempty square matrix");
  require(form.symmetric(), "bilinear form must be symmetric");
  if (is_zero(determinant(form))) throw DomainError("bilinear form is degenerate");
}

LieSubalgebra checked(LieSubalgebra g) {
  if (!g.closed_under_bracket())
    throw InvalidArgument("algebra \"" + g.name() + "\" is not closed under the commutator");
  return g;
}

RatMatrix symplectic_form4() {
  RatMatrix j(4, 4);
  j(0, 2) = 1, j(1, 3) = 1, j(2, 0) = -1, j(3, 1) = -1;
  return j;
}

}  // namespace

LieSubalgebra::LieSubalgebra(std::size_t n, std::vector<RatMatrix> basis, std::string name)
    : n_(n), basis_(std::move(basis)), name_(std::move(name)) {
  require(n_ >= 1, "algebra dimension n must be >= 1");
  for (const auto& m : basis_)
    require(m.rows() == n_ && m.cols() == n_, "algebra basis matrix has the wrong shape");
  if (rank(rows_matrix(flattened(), n_ * n_)) != basis_.size())
    throw InvalidArgument("algebra basis is linearly dependent");
}

std::vector<RatVector> LieSubalgebra::flattened() const {
  std::vector<RatVector> out;
  out.reserve(basis_.size());
  for (const auto& m : basis_) out.push_back(flatten(m));
  return out;
}

bool LieSubalgebra::closed_under_bracket() const {
  SpanTester span(flattened(), n_ * n_);
  for (std::size_t a = 0; a < basis_.size(); ++a)
    for (std::size_t b = a + 1; b < basis_.size(); ++b) {
      RatMatrix br = basis_[a] * basis_[b] - basis_[b] * basis_[a];
      if (!span.contains(flatten(br))) return false;
    }
  return true;
}

LieSubalgebra orthogonal_algebra(const RatMatrix& form) {
  check_form(form);
  const std::size_t n = form.rows();
  return LieSubalgebra(n, matrices_satisfying(form_conditions(form, false), n), "o");
}

LieSubalgebra conformal_algebra(const RatMatrix& form) {
  check_form(form);
  const std::size_t n = form.rows();
  auto basis = matrices_satisfying(form_conditions(form, false), n);
  basis.push_back(RatMatrix::identity(n));
  return LieSubalgebra(n, std::move(basis), "co");
}

LieSubalgebra builtin_algebra(const AlgebraSpec& spec) {
  const std::size_t n = spec.n;
  const std::size_t nn = n * n;
  require(n >= 1, "algebra needs n >= 1");
  const std::string& name = spec.name;

  if (name == "gl") {
    std::vector<RatMatrix> basis;
    for (std::size_t k = 0; k < nn; ++k) {
      RatMatrix m(n, n);
      m(k / n, k % n) = 1;
      basis.push_back(std::move(m));
    }
    return LieSubalgebra(n, std::move(basis), "gl");
  }
  if (name == "sl") {
    require(n >= 2, "sl needs n >= 2");
    RatMatrix trace(1, nn);
    for (std::size_t i = 0; i < n; ++i) trace(0, i * n + i) = 1;
    return checked(LieSubalgebra(n, matrices_satisfying(trace, n), "sl"));
  }
  if (name == "o" || name == "co") {
    require(spec.q <= n, "signature q must satisfy 0 <= q <= n");
    RatMatrix e = eta(n, spec.q);
    return checked(name == "o" ? orthogonal_algebra(e) : conformal_algebra(e));
  }
  if (name == "glW" || name == "glWc") {
    require(n >= 2, "glW needs n >= 2");
    // M e₁ ∈ span(e₁): M_{i0} = 0 for i >= 1
    std::size_t extra = name == "glWc" ? 1 : 0;
    RatMatrix cond(n - 1 + extra, nn);
    for (std::size_t i = 1; i < n; ++i) cond(i - 1, i * n) = 1;
    if (extra) {
      RatMatrix coupling = spec.coupling.value_or(RatMatrix::identity(n));
      require(coupling.rows() == n && coupling.cols() == n, "glWc coupling must be n x n");
      // M_00 - c φ(M) = 0
      for (std::size_t k = 0; k < nn; ++k) cond(n - 1, k) = -spec.c * coupling(k / n, k % n);
      cond(n - 1, 0) += 1;
    }
    return checked(LieSubalgebra(n, matrices_satisfying(cond, n), name));
  }
  if (name == "csp") {
    require(n == 4, "csp(2,R) is defined for n = 4 only");
    RatMatrix cond = form_conditions(symplectic_form4(), true);
    // drop the multiplier coordinate; M determines λ, so the projection stays independent
    std::vector<RatVector> projected;
    for (auto& v : nullspace_vectors(cond)) projected.emplace_back(v.begin(), v.begin() + nn);
    std::vector<RatMatrix> basis;
    for (auto& v : canonical_span(projected, nn)) basis.push_back(unflatten(v, n));
    return checked(LieSubalgebra(n, std::move(basis), "csp"));
  }
  throw InvalidArgument("unknown algebra \"" + name + "\"");
}

Sym2Tensor ProlongSpace::element(std::size_t b) const {
  require(degree == 1, "ProlongSpace::element needs degree 1");
  require(b < basis.size(), "ProlongSpace::element index out of range");
  return Sym2Tensor(n, basis[b]);
}

ProlongSpace kth_prolongation(const LieSubalgebra& g, std::size_t k) {
  require(k >= 1, "prolongation degree must be >= 1");
  const std::size_t n = g.n();
  const std::size_t nn = n * n;
  const SymmetricIndex lower(n, k + 1);
  const SymmetricIndex fixed(n, k);
  const std::size_t block = lower.size();

  // α with α·vec(M) = 0 for all M ∈ 𝔤, and conversely
  const auto annihilators = nullspace_vectors(rows_matrix(g.flattened(), nn));

  RatMatrix cond(fixed.size() * annihilators.size(), n * block);
  std::size_t r = 0;
  for (std::size_t t = 0; t < fixed.size(); ++t) {
    // slice M^i_j = s^i_{j T}
    std::vector<std::size_t> column_of(n);
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<std::size_t> idx = fixed.tuple(t);
      idx.push_back(j);
      column_of[j] = lower.position(std::move(idx));
    }
    for (const auto& alpha : annihilators) {
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (!is_zero(alpha[i * n + j])) cond(r, i * block + column_of[j]) += alpha[i * n + j];
      ++r;
    }
  }

  ProlongSpace out;
  out.n = n;
  out.degree = k;
  out.basis = nullspace_vectors(cond);
  return out;
}

ProlongSpace first_prolongation(const LieSubalgebra& g) { return kth_prolongation(g, 1); }

std::string TypeReport::verdict() const {
  if (finite_type) return "finite-type-" + std::to_string(*finite_type);
  return "type>" + std::to_string(k_max);
}

TypeReport finite_type_order(const LieSubalgebra& g, std::size_t k_max) {
  require(k_max >= 1, "k_max must be >= 1");
  TypeReport rep;
  rep.k_max = k_max;
  for (std::size_t k = 1; k <= k_max; ++k) {
    std::size_t d = kth_prolongation(g, k).dim();
    rep.dims.push_back(d);
    if (d == 0) {
      rep.finite_type = k;
      break;
    }
  }
  return rep;
}

Sym2Tensor co1_formula_element(const RatMatrix& form, const RatVector& mu) {
  const std::size_t n = form.rows();
  require(mu.size() == n, "covector length does not match the form");
  const RatMatrix inv = inverse(form);
  // raised covector μ^i = Σ_s G^{is} μ_s
  RatVector raised(n, Rational(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t s = 0; s < n; ++s) raised[i] += inv(i, s) * mu[s];
  Sym2Tensor out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = j; k < n; ++k) {
        Rational v = -raised[i] * form(j, k);
        if (i == j) v += mu[k];
        if (i == k) v += mu[j];
        out.set(i, j, k, std::move(v));
      }
  return out;
}

ProlongSpace co1_formula_basis(const RatMatrix& form) {
  check_form(form);
  const std::size_t n = form.rows();
  ProlongSpace out;
  out.n = n;
  out.degree = 1;
  for (std::size_t m = 0; m < n; ++m) {
    RatVector mu(n, Rational(0));
    mu[m] = 1;
    out.basis.push_back(co1_formula_element(form, mu).packed());
  }
  return out;
}

ProlongSpace co1_formula_basis(std::size_t n, std::size_t q) {
  require(n >= 1 && q <= n, "invalid signature");
  return co1_formula_basis(eta(n, q));
}

Sym2Tensor projective_element(const RatVector& mu) {
  const std::size_t n = mu.size();
  Sym2Tensor out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = j; k < n; ++k) {
        Rational v = 0;
        if (i == j) v += mu[k];
        if (i == k) v += mu[j];
        out.set(i, j, k, std::move(v));
      }
  return out;
}

ProlongSpace projective_subspace(std::size_t n) {
  require(n >= 2, "projective subspace needs n >= 2");
  ProlongSpace out;
  out.n = n;
  out.degree = 1;
  for (std::size_t m = 0; m < n; ++m) {
    RatVector mu(n, Rational(0));
    mu[m] = 1;
    out.basis.push_back(projective_element(mu).packed());
  }
  return out;
}

ClosureVerdict semidirect_closure_check(const SubgroupTag& tag, const ProlongSpace& g1,
                                        std::size_t samples, std::mt19937_64& rng) {
  require(g1.degree == 1, "closure check needs a degree-1 prolongation");
  require(tag.n == g1.n, "subgroup tag dimension does not match the prolongation");
  ClosureVerdict v;
  if (g1.dim() == 0) return v;
  SpanTester span(g1.basis, g1.width());
  std::vector<GL1Element> group{GL1Element::identity(g1.n)};
  for (std::size_t s = 0; s < samples; ++s) group.push_back(sample_member(tag, rng));
  for (const auto& b : group)
    for (std::size_t e = 0; e < g1.dim(); ++e) {
      ++v.checked;
      if (!span.contains(sym2_transport(b, g1.element(e)).packed())) ++v.failures;
    }
  v.ok = v.failures == 0;
  return v;
}

}  // namespace gstruct
