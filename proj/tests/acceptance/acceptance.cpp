// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "gstruct/connection.hpp"
#include "gstruct/prolong.hpp"
#include "gstruct/structures.hpp"
#include "support/generators.hpp"

using namespace gstruct;
namespace gt = gstruct::gen;

namespace {

constexpr double kRelTol = 1e-12;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  void fail(const std::string& why) {
    if (pass) detail << "first failure: " << why << "; ";
    pass = false;
  }
};

LieSubalgebra algebra(const std::string& name, std::size_t n, std::size_t q = 0) {
  AlgebraSpec spec;
  spec.name = name;
  spec.n = n;
  spec.q = q;
  return builtin_algebra(spec);
}

// max |a - b| <= tol * max |b|
bool close_to(const RealMatrix& a, const RatMatrix& b, double tol) {
  double scale = 0, err = 0;
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      scale = std::max(scale, std::abs(to_double(b(i, j))));
      err = std::max(err, std::abs(a(i, j) - to_double(b(i, j))));
    }
  return err <= tol * scale;
}

std::string sig(std::size_t q, std::size_t n) { return "(" + std::to_string(q) + "," + std::to_string(n - q) + ")"; }

void criterion1(Outcome& out) {
  std::size_t cases = 0;
  for (std::size_t n = 1; n <= 6; ++n)
    for (std::size_t q = 0; q <= n; ++q, ++cases)
      if (first_prolongation(algebra("o", n, q)).dim() != 0) out.fail("dim o" + sig(q, n) + "_1 != 0");
  for (std::size_t n = 3; n <= 5; ++n)
    for (std::size_t q = 0; q <= n; ++q, ++cases) {
      auto co = algebra("co", n, q);
      if (first_prolongation(co).dim() != n) out.fail("dim co" + sig(q, n) + "_1 != n");
      if (kth_prolongation(co, 2).dim() != 0) out.fail("dim co" + sig(q, n) + "_2 != 0");
    }
  for (std::size_t n = 2; n <= 5; ++n, ++cases) {
    auto sl1 = first_prolongation(algebra("sl", n));
    if (sl1.dim() != n * n * (n + 1) / 2 - n) out.fail("dim sl(" + std::to_string(n) + ")_1");
    for (std::size_t b = 0; b < sl1.dim(); ++b) {
      Sym2Tensor s = sl1.element(b);
      for (std::size_t i = 0; i < n; ++i) {
        Rational tr = 0;
        for (std::size_t k = 0; k < n; ++k) tr += s(k, i, k);
        if (!is_zero(tr)) out.fail("sl_1 basis element with nonzero trace");
      }
    }
  }
  out.detail << cases << " algebra cases";
}

void criterion2(Outcome& out) {
  std::size_t cases = 0;
  for (std::size_t n = 1; n <= 5; ++n)
    for (std::size_t q = 0; q <= n; ++q, ++cases) {
      auto nullspace = first_prolongation(algebra("co", n, q));
      auto formula = co1_formula_basis(n, q);
      if (!same_span(nullspace.basis, formula.basis, formula.width())) out.fail("span mismatch for co" + sig(q, n));
    }
  out.detail << cases << " signatures";
}

void criterion3(Outcome& out) {
  gt::Rng rng(3003);
  std::size_t total = 0, exact = 0;
  for (std::size_t n = 1; n <= 5; ++n)
    for (int t = 0; t < 200; ++t, ++total) {
      std::size_t q = rng() % (n + 1);
      RatMatrix g;
      if (t % 2 == 0) {
        g = gt::rand_metric(rng, n, q);
      } else {
        // c·Pᵗ η P with unimodular P: |det g| = cⁿ, a perfect n-th power.
        GL1Element p = sample_member(SubgroupTag(GroupKind::SLpm, n), rng);
        g = gt::rand_positive(rng) * (p.matrix().transpose() * eta(n, q) * p.matrix());
      }
      auto d = decompose_metric(MetricValue(g, q));
      auto back = recompose_metric(d.rep, d.vol);
      if (!close_to(back.g, g, kRelTol)) out.fail("round trip error above 1e-12 at n=" + std::to_string(n));
      if (back.signature != Signature{q, n - q}) out.fail("signature not preserved");
      if (exact_root(abs(determinant(g)), static_cast<unsigned>(n))) {
        ++exact;
        if (!back.exact || *back.exact != g) out.fail("perfect-power determinant not recomposed exactly");
      }
      Rational lambda = gt::rand_positive(rng);
      auto rescaled = recompose_metric(d.rep.scaled(lambda), d.vol);
      if (!close_to(rescaled.g, g, kRelTol)) out.fail("representative rescaling changed the metric");
      auto rescaled_exact = recompose_metric(ConformalRep::from_exact(lambda * g), d.vol);
      if (!close_to(rescaled_exact.g, g, kRelTol)) out.fail("exact representative rescaling changed the metric");
    }
  out.detail << total << " metrics, " << exact << " with exact recomposition";
}

void criterion4(Outcome& out) {
  gt::Rng rng(4004);
  for (int t = 0; t < 100; ++t) {
    std::size_t n = 2 + t % 4;
    Sym2Tensor gamma = gt::rand_sym2(rng, n);
    PolyVolumeField v{gt::rand_positive_volume(rng, n)};
    Point x = gt::rand_point(rng, n);
    auto r = equiaffine_representative(gamma, v, x);
    for (const auto& e : volume_parallel_residual(r.gamma, v, x))
      if (!is_zero(e)) out.fail("nonzero residual");
    auto mu = projective_difference(gamma, r.gamma);
    if (!mu || *mu != r.mu) out.fail("projective_difference does not reproduce the shift");
  }
  out.detail << "100 instances, n in 2..5";
}

void criterion5(Outcome& out) {
  gt::Rng rng(5005);
  double worst = 0;
  for (int t = 0; t < 100; ++t) {
    std::size_t n = 1 + t % 5;
    GL1Element l(gt::rand_invertible(rng, n)), a(gt::rand_invertible(rng, n));
    auto vol = t % 2 ? VolumeDensityValue::from_exact(gt::rand_positive(rng))
                     : VolumeDensityValue::from_square(gt::rand_positive(rng));
    double lhs = volume_equivariant_value(vol, l * a).value;
    double rhs = rational_power(abs(a.det()), -1, static_cast<unsigned>(n)).value * volume_equivariant_value(vol, l).value;
    double rel = std::abs(lhs - rhs) / std::abs(rhs);
    worst = std::max(worst, rel);
    if (rel > kRelTol) out.fail("volume equivariance off by " + std::to_string(rel));
  }
  for (int t = 0; t < 100; ++t) {
    std::size_t n = 1 + t % 4;
    Sym2Tensor gamma = gt::rand_sym2(rng, n);
    Jet2 j1 = gt::rand_jet(rng, n), j2 = gt::rand_jet(rng, n);
    if (connection_transform(connection_transform(gamma, j1), j2) != connection_transform(gamma, jet2_mul(j1, j2)))
      out.fail("connection cocycle law broken");
  }
  out.detail << "100 volume cases (max rel err " << worst << "), 100 exact cocycle cases";
}

void criterion6(Outcome& out) {
  gt::Rng rng(6006);
  std::size_t solvable = 0, rejected = 0;
  for (int t = 0; t < 100; ++t) {
    std::size_t n = 2 + t % 3;
    auto g = gt::rand_metric_field(rng, n, rng() % (n + 1));
    Point x = gt::good_point(rng, g);
    RatMatrix gx = g.value_at(x);
    Covector theta = gt::rand_vector(rng, n);
    Sym2Tensor w = weyl_connection_at(g, theta, x);
    auto back = weyl_compatibility_check(w, g, x);
    if (!back || *back != theta) out.fail("theta not recovered");

    Sym2Tensor diff = w - levi_civita_at(g, x);
    if (!in_span(co1_formula_basis(gx).basis, packed_vector(diff))) out.fail("difference outside co1 of g(x)");
    // Transport to a diagonalizing frame Q (Qᵗ g Q = D) and test against co1 of D.
    auto inertia = congruence_diagonalize(gx);
    Sym2Tensor moved = sym2_transport(GL1Element(inertia.transform), diff);
    if (!in_span(co1_formula_basis(inertia.diagonal).basis, packed_vector(moved)))
      out.fail("transported difference outside co1 of the diagonal form");

    // Solvable: a projective shift of a Weyl connection.
    Sym2Tensor shifted = projective_shift(w, gt::rand_vector(rng, n));
    auto sol = weyl_intersection_at(shifted, g, x);
    if (!sol) {
      out.fail("solvable instance reported none");
    } else {
      auto th = weyl_compatibility_check(projective_shift(shifted, sol->mu), g, x);
      if (!th || *th != sol->theta) out.fail("returned pair does not verify");
      ++solvable;
    }

    // Off-span: add a direction outside 𝔭 + co1(g(x)).
    std::vector<RatVector> span = projective_subspace(n).basis;
    for (const auto& b : co1_formula_basis(gx).basis) span.push_back(b);
    SpanTester tester(span, n * Sym2Tensor::packed_size(n));
    Sym2Tensor e;
    do e = gt::rand_sym2(rng, n, 3);
    while (tester.contains(packed_vector(e)));
    if (weyl_intersection_at(levi_civita_at(g, x) + e, g, x)) out.fail("off-span perturbation reported solvable");
    else ++rejected;
  }
  out.detail << "100 round trips, " << solvable << " solvable verified, " << rejected << " off-span rejected";
}

void criterion7(Outcome& out) {
  gt::Rng rng(7007);
  std::size_t in_o = 0, exact_factors = 0, real_factors = 0;
  for (int t = 0; t < 500; ++t) {
    std::size_t n = 1 + t % 4, q = rng() % (n + 1);
    GL1Element a = GL1Element::identity(n);
    switch (t % 6) {
      case 0: a = GL1Element(gt::rand_invertible(rng, n)); break;
      case 1: a = sample_member(SubgroupTag(GroupKind::SLpm, n), rng); break;
      case 2: a = sample_member(SubgroupTag(GroupKind::O, n, q), rng); break;
      case 3: a = sample_member(SubgroupTag(GroupKind::CO, n, q), rng); break;
      case 4: a = sample_member(SubgroupTag(GroupKind::H, n), rng); break;
      case 5: a = GL1Element(Rational(-1) * sample_member(SubgroupTag(GroupKind::O, n, q), rng).matrix()); break;
    }
    auto v = sl_co_intersection_check(a, q);
    if (!v.consistent()) out.fail("SL± ∩ CO and O disagree");
    in_o += v.in_orthogonal;
    auto f = factor_sl_co(a, q);
    // An exact factor is checked exactly; its double copy is only a rendering.
    if (f.s_exact) {
      ++exact_factors;
      if (abs(determinant(*f.s_exact)) != 1) out.fail("exact |det s| differs from 1");
    } else if (++real_factors; std::abs(std::abs(determinant(f.s)) - 1.0) > kRelTol) {
      out.fail("|det s| differs from 1");
    }
  }
  std::size_t closures = 0;
  for (std::size_t n = 2; n <= 4; ++n) {
    for (std::size_t q = 0; q <= n; ++q, ++closures)
      if (!semidirect_closure_check(SubgroupTag(GroupKind::CO, n, q), co1_formula_basis(n, q), 20, rng).ok)
        out.fail("CO closure fails for " + sig(q, n));
    ++closures;
    if (!semidirect_closure_check(SubgroupTag(GroupKind::SLpm, n), first_prolongation(algebra("sl", n)), 20, rng).ok)
      out.fail("SL± closure fails for n=" + std::to_string(n));
  }
  out.detail << "500 matrices (" << in_o << " in O), factors checked exactly " << exact_factors
             << " and in double " << real_factors << ", " << closures
             << " closure checks";
}

void criterion8(Outcome& out) {
  gt::Rng rng(8008);
  std::size_t points = 0, witnesses = 0;
  for (std::size_t n = 1; n <= 4; ++n)
    for (int m = 0; m < 10; ++m) {
      auto g = gt::rand_metric_field(rng, n, rng() % (n + 1));
      for (int p = 0; p < 50; ++p, ++points) {
        Point x = gt::good_point(rng, g);
        Sym2Tensor lc = levi_civita_at(g, x);
        if (!metric_cov_deriv_at(lc, g, x).is_zero()) out.fail("nonzero compatibility residual");
        Sym2Tensor d;
        do d = gt::rand_sym2(rng, n, 2);
        while (d.is_zero());
        ++witnesses;
        if (metric_cov_deriv_at(lc + d, g, x).is_zero()) out.fail("perturbed connection still compatible");
      }
      // Every coordinate direction of S²ₙ breaks compatibility too.
      Point x = gt::good_point(rng, g);
      Sym2Tensor lc = levi_civita_at(g, x);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          for (std::size_t k = j; k < n; ++k, ++witnesses) {
            Sym2Tensor e(n);
            e.set(i, j, k, 1);
            if (metric_cov_deriv_at(lc + e, g, x).is_zero()) out.fail("basis perturbation still compatible");
          }
    }
  out.detail << points << " points on 40 metrics, " << witnesses << " uniqueness witnesses";
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
      {"prolongation dimensions", criterion1},
      {"nullspace vs formula spans", criterion2},
      {"decompose/recompose round trip", criterion3},
      {"equiaffine representative", criterion4},
      {"equivariance laws", criterion5},
      {"Weyl suite", criterion6},
      {"group-theoretic identities", criterion7},
      {"Levi-Civita correctness", criterion8},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome out;
    auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].second(out);
    } catch (const std::exception& e) {
      out.fail(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s criterion %zu (%s): %s [%.2fs]\n", out.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                out.detail.str().c_str(), secs);
    failures += !out.pass;
  }
  return failures == 0 ? 0 : 1;
}
