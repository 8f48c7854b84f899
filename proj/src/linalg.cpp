#include "gstruct/linalg.hpp"

#include <cmath>
#include <utility>

namespace gstruct {

namespace {

using IntRows = std::vector<std::vector<mpz_class>>;

IntRows clear_denominators(const RatMatrix& m) {
  IntRows rows(m.rows(), std::vector<mpz_class>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    mpz_class l = 1;
    for (std::size_t j = 0; j < m.cols(); ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
    for (std::size_t j = 0; j < m.cols(); ++j) rows[i][j] = m(i, j).get_num() * (l / m(i, j).get_den());
  }
  return rows;
}

}  // namespace

Echelon row_echelon(const RatMatrix& m) {
  const std::size_t nr = m.rows(), nc = m.cols();
  IntRows a = clear_denominators(m);

  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  mpz_class prev = 1;
  for (std::size_t c = 0; c < nc && r < nr; ++c) {
    std::size_t p = r;
    while (p < nr && a[p][c] == 0) ++p;
    if (p == nr) continue;
    std::swap(a[p], a[r]);
    const mpz_class& piv = a[r][c];
    for (std::size_t i = r + 1; i < nr; ++i) {
      for (std::size_t j = c + 1; j < nc; ++j) {
        mpz_class t = piv * a[i][j] - a[i][c] * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = piv;
    pivots.push_back(c);
    ++r;
  }

  RatMatrix red(nr, nc);
  for (std::size_t i = 0; i < r; ++i) {
    const mpz_class& piv = a[i][pivots[i]];
    for (std::size_t j = 0; j < nc; ++j) {
      if (a[i][j] == 0) continue;
      Rational q(a[i][j], piv);
      q.canonicalize();
      red(i, j) = q;
    }
  }
  for (std::size_t k = r; k-- > 0;) {
    const std::size_t pc = pivots[k];
    for (std::size_t i = 0; i < k; ++i) {
      Rational f = red(i, pc);
      if (is_zero(f)) continue;
      for (std::size_t j = pc; j < nc; ++j) red(i, j) -= f * red(k, j);
    }
  }
  return {std::move(red), std::move(pivots)};
}

std::size_t rank(const RatMatrix& m) { return row_echelon(m).rank(); }

std::vector<RatVector> nullspace_vectors(const RatMatrix& m) {
  const std::size_t nc = m.cols();
  Echelon e = row_echelon(m);
  std::vector<bool> is_pivot(nc, false);
  for (auto p : e.pivots) is_pivot[p] = true;

  std::vector<RatVector> basis;
  for (std::size_t f = 0; f < nc; ++f) {
    if (is_pivot[f]) continue;
    RatVector v(nc, Rational(0));
    v[f] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<RatMatrix> rat_nullspace(const RatMatrix& m) {
  std::vector<RatMatrix> out;
  for (auto& v : nullspace_vectors(m)) out.push_back(RatMatrix::column(v));
  return out;
}

Rational determinant(const RatMatrix& m) {
  require(m.square(), "determinant of a non-square matrix");
  const std::size_t n = m.rows();
  RatMatrix a = m;
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && is_zero(a(p, c))) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(c, j));
      det = -det;
    }
    det *= a(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (is_zero(a(i, c))) continue;
      Rational f = a(i, c) / a(c, c);
      for (std::size_t j = c; j < n; ++j) a(i, j) -= f * a(c, j);
    }
  }
  return det;
}

RatMatrix inverse(const RatMatrix& m) {
  require(m.square(), "inverse of a non-square matrix");
  const std::size_t n = m.rows();
  RatMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  Echelon e = row_echelon(aug);
  if (e.rank() < n || e.pivots[n - 1] != n - 1) throw DomainError("matrix is singular");
  RatMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
  return inv;
}

std::optional<RatVector> solve(const RatMatrix& a, const RatVector& b) {
  require(a.rows() == b.size(), "solve: right-hand side length mismatch");
  const std::size_t nc = a.cols();
  RatMatrix aug(a.rows(), nc + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < nc; ++j) aug(i, j) = a(i, j);
    aug(i, nc) = b[i];
  }
  Echelon e = row_echelon(aug);
  if (!e.pivots.empty() && e.pivots.back() == nc) return std::nullopt;
  RatVector x(nc, Rational(0));
  for (std::size_t r = 0; r < e.pivots.size(); ++r) x[e.pivots[r]] = e.reduced(r, nc);
  return x;
}

RatMatrix rows_matrix(const std::vector<RatVector>& rows, std::size_t width) {
  RatMatrix m(rows.size(), width);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    require(rows[i].size() == width, "vector length mismatch");
    for (std::size_t j = 0; j < width; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

std::vector<RatVector> canonical_span(const std::vector<RatVector>& vectors, std::size_t width) {
  Echelon e = row_echelon(rows_matrix(vectors, width));
  std::vector<RatVector> out;
  for (std::size_t r = 0; r < e.rank(); ++r) {
    RatVector v(width);
    for (std::size_t j = 0; j < width; ++j) v[j] = e.reduced(r, j);
    out.push_back(std::move(v));
  }
  return out;
}

bool in_span(const std::vector<RatVector>& basis, const RatVector& v) {
  return SpanTester(basis, v.size()).contains(v);
}

SpanTester::SpanTester(const std::vector<RatVector>& spanning, std::size_t width) : width_(width) {
  Echelon e = row_echelon(rows_matrix(spanning, width));
  for (std::size_t r = 0; r < e.rank(); ++r) {
    RatVector v(width);
    for (std::size_t j = 0; j < width; ++j) v[j] = e.reduced(r, j);
    rows_.push_back(std::move(v));
  }
  pivots_ = e.pivots;
}

bool SpanTester::contains(const RatVector& v) const {
  require(v.size() == width_, "SpanTester: vector length mismatch");
  RatVector w = v;
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    Rational f = w[pivots_[r]];
    if (is_zero(f)) continue;
    for (std::size_t j = pivots_[r]; j < width_; ++j) w[j] -= f * rows_[r][j];
  }
  for (const auto& x : w)
    if (!is_zero(x)) return false;
  return true;
}

bool same_span(const std::vector<RatVector>& a, const std::vector<RatVector>& b, std::size_t width) {
  return canonical_span(a, width) == canonical_span(b, width);
}

std::vector<RatVector> span_intersection(const std::vector<RatVector>& a,
                                         const std::vector<RatVector>& b, std::size_t width) {
  auto ca = canonical_span(a, width);
  auto cb = canonical_span(b, width);
  if (ca.empty() || cb.empty()) return {};
  // columns: a_1..a_p, -b_1..-b_q ; kernel coefficients give common vectors
  RatMatrix sys(width, ca.size() + cb.size());
  for (std::size_t j = 0; j < width; ++j) {
    for (std::size_t i = 0; i < ca.size(); ++i) sys(j, i) = ca[i][j];
    for (std::size_t i = 0; i < cb.size(); ++i) sys(j, ca.size() + i) = -cb[i][j];
  }
  std::vector<RatVector> common;
  for (const auto& coeff : nullspace_vectors(sys)) {
    RatVector v(width, Rational(0));
    for (std::size_t i = 0; i < ca.size(); ++i)
      if (!is_zero(coeff[i]))
        for (std::size_t j = 0; j < width; ++j) v[j] += coeff[i] * ca[i][j];
    common.push_back(std::move(v));
  }
  return canonical_span(common, width);
}

namespace {

// Column op col_dst += f * col_src, mirrored as the row op, on the symmetric
// matrix; the same column op on the transform.
void congruence_add(RatMatrix& a, RatMatrix& t, std::size_t dst, std::size_t src, const Rational& f) {
  const std::size_t n = a.rows();
  for (std::size_t i = 0; i < n; ++i) a(i, dst) += f * a(i, src);
  for (std::size_t j = 0; j < n; ++j) a(dst, j) += f * a(src, j);
  for (std::size_t i = 0; i < n; ++i) t(i, dst) += f * t(i, src);
}

void congruence_swap(RatMatrix& a, RatMatrix& t, std::size_t x, std::size_t y) {
  const std::size_t n = a.rows();
  for (std::size_t i = 0; i < n; ++i) std::swap(a(i, x), a(i, y));
  for (std::size_t j = 0; j < n; ++j) std::swap(a(x, j), a(y, j));
  for (std::size_t i = 0; i < n; ++i) std::swap(t(i, x), t(i, y));
}

}  // namespace

Inertia congruence_diagonalize(const RatMatrix& g) {
  require(g.square(), "congruence_diagonalize: matrix is not square");
  if (!g.symmetric()) throw InvalidArgument("congruence_diagonalize: matrix is not symmetric");
  const std::size_t n = g.rows();
  RatMatrix a = g;
  RatMatrix t = RatMatrix::identity(n);

  for (std::size_t k = 0; k < n; ++k) {
    if (is_zero(a(k, k))) {
      std::size_t j = k + 1;
      while (j < n && is_zero(a(j, j))) ++j;
      if (j < n) {
        congruence_swap(a, t, k, j);
      } else {
        // all remaining diagonal entries vanish; a nonzero a(k,j) gives a(k,k) = 2 a(k,j)
        j = k + 1;
        while (j < n && is_zero(a(k, j))) ++j;
        if (j == n) continue;
        congruence_add(a, t, k, j, Rational(1));
      }
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      if (is_zero(a(k, i))) continue;
      congruence_add(a, t, i, k, -a(k, i) / a(k, k));
    }
  }

  Inertia out;
  out.transform = std::move(t);
  for (std::size_t i = 0; i < n; ++i) {
    int s = sgn(a(i, i));
    if (s > 0) ++out.positive;
    else if (s < 0) ++out.negative;
    else ++out.zero;
  }
  out.diagonal = std::move(a);
  return out;
}

double determinant(const RealMatrix& m) {
  require(m.square(), "determinant of a non-square matrix");
  const std::size_t n = m.rows();
  RealMatrix a = m;
  double det = 1.0;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    for (std::size_t i = c + 1; i < n; ++i)
      if (std::abs(a(i, c)) > std::abs(a(p, c))) p = i;
    if (a(p, c) == 0.0) return 0.0;
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(c, j));
      det = -det;
    }
    det *= a(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      double f = a(i, c) / a(c, c);
      for (std::size_t j = c; j < n; ++j) a(i, j) -= f * a(c, j);
    }
  }
  return det;
}

}  // namespace gstruct
