#pragma once

#include <vector>

#include "gstruct/linalg.hpp"

namespace gstruct {

/// Element s of S²ₙ: components s^i_{jk}, symmetric in (j,k).
///
/// Storage is `n` blocks (one per upper index i) of n(n+1)/2 packed entries.
/// Within a block the pair (j,k) with j <= k sits at
///   j*n - j*(j-1)/2 + (k - j),
/// i.e. the upper triangle read row by row ("upper-jk" packing). This index
/// map is part of the public contract: prolongation constraint systems and
/// the JSON encoding both rely on it.
class Sym2Tensor {
public:
  Sym2Tensor() = default;
  explicit Sym2Tensor(std::size_t n) : n_(n), data_(n * packed_size(n), Rational(0)) {}
  Sym2Tensor(std::size_t n, std::vector<Rational> packed);

  static constexpr std::size_t packed_size(std::size_t n) { return n * (n + 1) / 2; }
  static std::size_t packed_index(std::size_t n, std::size_t j, std::size_t k) {
    if (j > k) std::swap(j, k);
    return j * (2 * n - j + 1) / 2 + (k - j);
  }

  std::size_t dim() const { return n_; }
  const std::vector<Rational>& packed() const { return data_; }

  const Rational& operator()(std::size_t i, std::size_t j, std::size_t k) const {
    return data_[i * packed_size(n_) + packed_index(n_, j, k)];
  }
  /// Sets s^i_{jk} (and therefore s^i_{kj}).
  void set(std::size_t i, std::size_t j, std::size_t k, Rational v) {
    data_[i * packed_size(n_) + packed_index(n_, j, k)] = std::move(v);
  }

  Sym2Tensor& operator+=(const Sym2Tensor& o);
  Sym2Tensor& operator-=(const Sym2Tensor& o);
  Sym2Tensor& operator*=(const Rational& k);

  friend Sym2Tensor operator+(Sym2Tensor a, const Sym2Tensor& b) { return a += b; }
  friend Sym2Tensor operator-(Sym2Tensor a, const Sym2Tensor& b) { return a -= b; }
  friend Sym2Tensor operator-(Sym2Tensor a) { return a *= Rational(-1); }
  friend Sym2Tensor operator*(const Rational& k, Sym2Tensor a) { return a *= k; }
  friend bool operator==(const Sym2Tensor& a, const Sym2Tensor& b) {
    return a.n_ == b.n_ && a.data_ == b.data_;
  }

  bool is_zero() const;

  /// The matrix M^i_j = s^i_{j v} for the basis vector e_v (the slice s(e_v, ·)).
  RatMatrix slice(std::size_t v) const;

private:
  std::size_t n_ = 0;
  std::vector<Rational> data_;
};

/// Nondecreasing index tuples of length `order` over {0..n-1} in
/// lexicographic order: the packing of totally symmetric lower indices.
/// For order 2 this coincides with the upper-jk packing.
class SymmetricIndex {
public:
  SymmetricIndex(std::size_t n, std::size_t order);

  std::size_t n() const { return n_; }
  std::size_t order() const { return order_; }
  std::size_t size() const { return tuples_.size(); }
  const std::vector<std::size_t>& tuple(std::size_t pos) const { return tuples_[pos]; }
  /// Position of the multiset given by `indices` (any order).
  std::size_t position(std::vector<std::size_t> indices) const;

private:
  std::size_t n_;
  std::size_t order_;
  std::vector<std::vector<std::size_t>> tuples_;
};

/// Number of multisets of size k drawn from n symbols.
std::size_t multiset_count(std::size_t n, std::size_t k);

}  // namespace gstruct
