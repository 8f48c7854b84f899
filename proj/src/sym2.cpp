#include "gstruct/sym2.hpp"

#include <algorithm>

namespace gstruct {

Sym2Tensor::Sym2Tensor(std::size_t n, std::vector<Rational> packed) : n_(n), data_(std::move(packed)) {
  require(data_.size() == n * packed_size(n), "Sym2Tensor: packed length must be n*n(n+1)/2");
}

Sym2Tensor& Sym2Tensor::operator+=(const Sym2Tensor& o) {
  require(n_ == o.n_, "Sym2Tensor dimension mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

Sym2Tensor& Sym2Tensor::operator-=(const Sym2Tensor& o) {
  require(n_ == o.n_, "Sym2Tensor dimension mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

Sym2Tensor& Sym2Tensor::operator*=(const Rational& k) {
  for (auto& x : data_) x *= k;
  return *this;
}

bool Sym2Tensor::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& x) { return gstruct::is_zero(x); });
}

RatMatrix Sym2Tensor::slice(std::size_t v) const {
  RatMatrix m(n_, n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) m(i, j) = (*this)(i, j, v);
  return m;
}

namespace {

void enumerate(std::size_t n, std::size_t order, std::size_t start, std::vector<std::size_t>& cur,
               std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == order) {
    out.push_back(cur);
    return;
  }
  for (std::size_t v = start; v < n; ++v) {
    cur.push_back(v);
    enumerate(n, order, v, cur, out);
    cur.pop_back();
  }
}

}  // namespace

SymmetricIndex::SymmetricIndex(std::size_t n, std::size_t order) : n_(n), order_(order) {
  std::vector<std::size_t> cur;
  enumerate(n, order, 0, cur, tuples_);
}

std::size_t SymmetricIndex::position(std::vector<std::size_t> indices) const {
  require(indices.size() == order_, "SymmetricIndex: wrong number of indices");
  std::sort(indices.begin(), indices.end());
  // rank of a nondecreasing tuple in lexicographic order
  std::size_t pos = 0;
  std::size_t prev = 0;
  for (std::size_t t = 0; t < order_; ++t) {
    require(indices[t] < n_, "SymmetricIndex: index out of range");
    const std::size_t remaining = order_ - t - 1;
    for (std::size_t v = prev; v < indices[t]; ++v) pos += multiset_count(n_ - v, remaining);
    prev = indices[t];
  }
  return pos;
}

std::size_t multiset_count(std::size_t n, std::size_t k) {
  // C(n + k - 1, k)
  if (k == 0) return 1;
  if (n == 0) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n + i - 1) / i;
  return r;
}

}  // namespace gstruct
