#pragma once

#include <optional>
#include <vector>

#include "gstruct/matrix.hpp"

namespace gstruct {

using RatVector = std::vector<Rational>;

/// Reduced row echelon form together with the pivot column of each nonzero row.
struct Echelon {
  RatMatrix reduced;
  std::vector<std::size_t> pivots;

  std::size_t rank() const { return pivots.size(); }
};

/// Fraction-free elimination (rows cleared to integers, Bareiss updates)
/// followed by exact back substitution. The pivot of each column is the
/// first nonzero entry at or below the current row, so the result depends
/// only on the input.
Echelon row_echelon(const RatMatrix& m);

std::size_t rank(const RatMatrix& m);

/// Kernel basis as n x 1 column matrices. Vector t has entry 1 at the t-th
/// free column, 0 at every other free column, and the pivot coordinates
/// solved from the reduced system; an empty (0-row) input yields the
/// standard basis.
std::vector<RatMatrix> rat_nullspace(const RatMatrix& m);

/// Kernel basis as plain coordinate vectors (same order as rat_nullspace).
std::vector<RatVector> nullspace_vectors(const RatMatrix& m);

Rational determinant(const RatMatrix& m);

/// Exact inverse; throws DomainError when singular.
RatMatrix inverse(const RatMatrix& m);

/// Some solution of a x = b (free variables set to zero), or nullopt when the
/// system is inconsistent.
std::optional<RatVector> solve(const RatMatrix& a, const RatVector& b);

/// Stack vectors as the rows of a matrix (all of length `width`).
RatMatrix rows_matrix(const std::vector<RatVector>& rows, std::size_t width);

/// Canonical basis of span(vectors): the nonzero rows of the reduced echelon
/// form. Two spans are equal iff their canonical bases are equal.
std::vector<RatVector> canonical_span(const std::vector<RatVector>& vectors, std::size_t width);

bool in_span(const std::vector<RatVector>& basis, const RatVector& v);

/// Reusable membership test against a fixed span (reduces against its
/// reduced echelon basis).
class SpanTester {
public:
  SpanTester(const std::vector<RatVector>& spanning, std::size_t width);
  bool contains(const RatVector& v) const;
  std::size_t dim() const { return rows_.size(); }
  const std::vector<RatVector>& basis() const { return rows_; }

private:
  std::size_t width_;
  std::vector<RatVector> rows_;
  std::vector<std::size_t> pivots_;
};

bool same_span(const std::vector<RatVector>& a, const std::vector<RatVector>& b, std::size_t width);

/// Basis of span(a) ∩ span(b) in the ambient coordinate space.
std::vector<RatVector> span_intersection(const std::vector<RatVector>& a,
                                         const std::vector<RatVector>& b, std::size_t width);

struct Inertia {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;
  /// transformᵗ · g · transform is diagonal
  RatMatrix transform;
  RatMatrix diagonal;
};

/// Symmetric congruence reduction to diagonal form (Sylvester inertia).
Inertia congruence_diagonalize(const RatMatrix& g);

/// Partial-pivot LU determinant in double precision.
double determinant(const RealMatrix& m);

}  // namespace gstruct
