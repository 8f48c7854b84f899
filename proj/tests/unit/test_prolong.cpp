#include <gtest/gtest.h>

#include "gstruct/errors.hpp"
#include "gstruct/prolong.hpp"
#include "support/generators.hpp"

using namespace gstruct;
using gstruct::gen::Rng;

namespace {

LieSubalgebra algebra(const std::string& name, std::size_t n, std::size_t q = 0) {
  AlgebraSpec spec;
  spec.name = name;
  spec.n = n;
  spec.q = q;
  return builtin_algebra(spec);
}

// Every slice M^i_j = s^i_{j T} (T a fixed multiset of size `degree`) lies in 𝔤.
bool slices_in_algebra(const LieSubalgebra& g, const ProlongSpace& space) {
  std::size_t n = g.n();
  SpanTester in_g(g.flattened(), n * n);
  SymmetricIndex lower(n, space.degree + 1), fixed(n, space.degree);
  for (const auto& v : space.basis)
    for (std::size_t t = 0; t < fixed.size(); ++t) {
      RatVector m(n * n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          auto idx = fixed.tuple(t);
          idx.push_back(j);
          m[i * n + j] = v[i * lower.size() + lower.position(idx)];
        }
      if (!in_g.contains(m)) return false;
    }
  return true;
}

}  // namespace

TEST(Algebra, BuiltinExamples) {
  auto o = algebra("o", 2, 1);
  ASSERT_EQ(o.dim(), 1u);
  EXPECT_TRUE(same_span(o.flattened(), {{0, 1, 1, 0}}, 4));
  EXPECT_EQ(algebra("co", 2, 1).dim(), 2u);
  EXPECT_EQ(algebra("sl", 2).dim(), 3u);
  EXPECT_EQ(algebra("gl", 3).dim(), 9u);
  EXPECT_EQ(algebra("o", 4, 1).dim(), 6u);
  EXPECT_EQ(algebra("csp", 4).dim(), 11u);
  EXPECT_EQ(algebra("glW", 3).dim(), 7u);
  EXPECT_EQ(algebra("glWc", 3).dim(), 6u);
}

TEST(Algebra, BuiltinsAreClosedUnderBracket) {
  for (const auto& [name, n, q] : std::vector<std::tuple<std::string, std::size_t, std::size_t>>{
           {"gl", 3, 0}, {"sl", 3, 0}, {"o", 4, 2}, {"co", 3, 1}, {"glW", 3, 0}, {"glWc", 3, 0}, {"csp", 4, 0}})
    EXPECT_TRUE(algebra(name, n, q).closed_under_bracket()) << name;
}

TEST(Algebra, RejectsBadInput) {
  EXPECT_THROW(LieSubalgebra(2, {RatMatrix::identity(2), RatMatrix::diagonal({2, 2})}, "dep"), InvalidArgument);
  EXPECT_THROW(LieSubalgebra(2, {RatMatrix::identity(3)}, "shape"), InvalidArgument);
  EXPECT_THROW(algebra("csp", 3), InvalidArgument);
  EXPECT_THROW(algebra("nope", 2), InvalidArgument);
  EXPECT_THROW(algebra("o", 2, 3), InvalidArgument);
}

TEST(Algebra, NotClosedDetected) {
  // span{E12, E21} is not closed: [E12, E21] = diag(1, -1).
  LieSubalgebra g(2, {RatMatrix{{0, 1}, {0, 0}}, RatMatrix{{0, 0}, {1, 0}}}, "pair");
  EXPECT_FALSE(g.closed_under_bracket());
}

TEST(FirstProlongation, Dimensions) {
  for (std::size_t n = 1; n <= 6; ++n)
    for (std::size_t q = 0; q <= n; ++q) EXPECT_EQ(first_prolongation(algebra("o", n, q)).dim(), 0u);
  EXPECT_EQ(first_prolongation(algebra("co", 4, 1)).dim(), 4u);
  EXPECT_EQ(first_prolongation(algebra("sl", 2)).dim(), 4u);
  for (std::size_t n = 1; n <= 4; ++n)
    EXPECT_EQ(first_prolongation(algebra("gl", n)).dim(), n * n * (n + 1) / 2);
}

TEST(FirstProlongation, SlTraceConstraint) {
  for (std::size_t n = 2; n <= 4; ++n) {
    auto sl1 = first_prolongation(algebra("sl", n));
    EXPECT_EQ(sl1.dim(), n * n * (n + 1) / 2 - n);
    for (std::size_t b = 0; b < sl1.dim(); ++b) {
      Sym2Tensor s = sl1.element(b);
      for (std::size_t i = 0; i < n; ++i) {
        Rational tr = 0;
        for (std::size_t k = 0; k < n; ++k) tr += s(k, i, k);
        EXPECT_TRUE(is_zero(tr));
      }
    }
  }
}

TEST(FirstProlongation, PropertySlicesLieInAlgebra) {
  for (const auto& g : {algebra("co", 3, 1), algebra("sl", 3), algebra("glW", 3), algebra("glWc", 3),
                        algebra("csp", 4)}) {
    auto g1 = first_prolongation(g);
    EXPECT_TRUE(slices_in_algebra(g, g1)) << g.name();
    EXPECT_EQ(rank(rows_matrix(g1.basis, g1.width())), g1.dim());
  }
}

TEST(FirstProlongation, PropertyMaximality) {
  // Random tensors whose slices all lie in 𝔤 must lie in 𝔤₁: build them from
  // the co1 formula, which needs no nullspace computation.
  Rng rng(8);
  for (std::size_t n = 2; n <= 4; ++n) {
    auto g1 = first_prolongation(algebra("co", n, 1));
    SpanTester t(g1.basis, g1.width());
    for (int k = 0; k < 5; ++k)
      EXPECT_TRUE(t.contains(packed_vector(co1_formula_element(eta(n, 1), gen::rand_vector(rng, n)))));
  }
}

TEST(KthProlongation, Examples) {
  EXPECT_EQ(kth_prolongation(algebra("co", 4, 1), 2).dim(), 0u);
  EXPECT_EQ(kth_prolongation(algebra("o", 2, 1), 2).dim(), 0u);
  auto gl2 = kth_prolongation(algebra("gl", 2), 2);
  EXPECT_EQ(gl2.dim(), 2 * multiset_count(2, 3));
  EXPECT_EQ(gl2.dim(), 8u);
  EXPECT_EQ(kth_prolongation(algebra("sl", 2), 1).dim(), first_prolongation(algebra("sl", 2)).dim());
  EXPECT_THROW(kth_prolongation(algebra("sl", 2), 0), InvalidArgument);
}

TEST(KthProlongation, PropertySlicesLieInAlgebra) {
  for (const auto& g : {algebra("sl", 2), algebra("glW", 2), algebra("co", 3, 0)}) {
    for (std::size_t k = 2; k <= 3; ++k) {
      auto gk = kth_prolongation(g, k);
      EXPECT_TRUE(slices_in_algebra(g, gk)) << g.name() << " k=" << k;
      EXPECT_EQ(gk.width(), g.n() * multiset_count(g.n(), k + 1));
    }
  }
}

TEST(FiniteType, Verdicts) {
  auto o = finite_type_order(algebra("o", 4, 1));
  EXPECT_EQ(o.finite_type, 1u);
  EXPECT_EQ(o.verdict(), "finite-type-1");
  auto co = finite_type_order(algebra("co", 4, 1));
  EXPECT_EQ(co.dims, (std::vector<std::size_t>{4, 0}));
  EXPECT_EQ(co.verdict(), "finite-type-2");
  auto sl = finite_type_order(algebra("sl", 3), 3);
  EXPECT_FALSE(sl.finite_type);
  EXPECT_EQ(sl.verdict(), "type>3");
  EXPECT_EQ(sl.dims.size(), 3u);
}

TEST(Co1Formula, Examples) {
  Sym2Tensor s = co1_formula_element(eta(2, 1), {1, 0});
  Sym2Tensor expect(2);
  expect.set(0, 0, 0, 1);
  expect.set(0, 1, 1, 1);
  expect.set(1, 0, 1, 1);
  EXPECT_EQ(s, expect);
  EXPECT_TRUE(co1_formula_element(eta(3, 1), {0, 0, 0}).is_zero());
  auto b = co1_formula_basis(4, 1);
  EXPECT_EQ(b.dim(), 4u);
  EXPECT_TRUE(same_span(b.basis, first_prolongation(algebra("co", 4, 1)).basis, b.width()));
}

TEST(Co1Formula, GeneralFormSpansConformalProlongation) {
  Rng rng(9);
  for (std::size_t n = 2; n <= 4; ++n) {
    RatMatrix g = gen::rand_metric(rng, n, 1);
    auto formula = co1_formula_basis(g);
    auto nullspace = first_prolongation(conformal_algebra(g));
    EXPECT_TRUE(same_span(formula.basis, nullspace.basis, formula.width()));
  }
}

TEST(Projective, Examples) {
  Sym2Tensor s = projective_element({1, 0});
  EXPECT_EQ(s(0, 0, 0), Rational(2));
  EXPECT_EQ(s(1, 0, 1), Rational(1));
  EXPECT_EQ(s(1, 1, 0), Rational(1));
  EXPECT_EQ(s(0, 1, 1), Rational(0));
  EXPECT_TRUE(projective_element({0, 0}).is_zero());
  for (std::size_t n = 2; n <= 5; ++n) EXPECT_EQ(projective_subspace(n).dim(), n);
  EXPECT_THROW(projective_subspace(1), InvalidArgument);
}

TEST(Projective, MeetsCo1Trivially) {
  for (std::size_t n = 2; n <= 4; ++n) {
    auto p = projective_subspace(n), c = co1_formula_basis(n, 1);
    EXPECT_TRUE(span_intersection(p.basis, c.basis, p.width()).empty());
  }
}

TEST(Closure, Examples) {
  Rng rng(10);
  auto co1 = co1_formula_basis(2, 1);
  auto v = semidirect_closure_check(SubgroupTag(GroupKind::CO, 2, 1), co1, 10, rng);
  EXPECT_TRUE(v.ok);
  EXPECT_EQ(v.checked, 11u * 2u);
  ProlongSpace zero{2, 1, {}};
  EXPECT_TRUE(semidirect_closure_check(SubgroupTag(GroupKind::O, 2, 1), zero, 5, rng).ok);
  auto sl1 = first_prolongation(algebra("sl", 3));
  EXPECT_TRUE(semidirect_closure_check(SubgroupTag(GroupKind::SLpm, 3), sl1, 10, rng).ok);
}

TEST(Closure, DetectsWrongGroup) {
  // 𝔠𝔬₁ is not preserved by generic GL elements.
  Rng rng(12);
  auto co1 = co1_formula_basis(3, 1);
  auto v = semidirect_closure_check(SubgroupTag(GroupKind::GL, 3), co1, 10, rng);
  EXPECT_FALSE(v.ok);
  EXPECT_GT(v.failures, 0u);
}
