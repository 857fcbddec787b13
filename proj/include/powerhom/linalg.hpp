#pragma once

#include <map>
#include <utility>
#include <vector>

#include "powerhom/scalar.hpp"

namespace powerhom {

/// Sparse vector: (index, value) pairs with strictly increasing indices and
/// nonzero values.
using SparseVec = std::vector<std::pair<int, Scalar>>;

SparseVec sparse_axpy(const SparseVec& a, const Scalar& c, const SparseVec& b);
SparseVec sparse_scaled(const SparseVec& a, const Scalar& c);
/// Canonicalizes arbitrary (index, value) pairs: sorts, merges, drops zeros.
SparseVec sparse_from(std::vector<std::pair<int, Scalar>> entries);

/// Incrementally built row echelon form. Each stored row is monic at its
/// pivot (its smallest index) and pivots are distinct, so reduction walks a
/// vector in increasing index order.
class Echelon {
 public:
  /// Reduces v; returns the remainder.
  SparseVec reduce(SparseVec v) const;
  /// Same, also recording the combination used: v = Σ coefs[p]*row(p) + remainder.
  SparseVec reduce(SparseVec v, std::vector<std::pair<int, Scalar>>& used) const;
  /// Inserts v; false when v already lies in the span.
  bool insert(const SparseVec& v);
  bool contains(const SparseVec& v) const { return reduce(v).empty(); }
  std::size_t rank() const { return rows_.size(); }

 private:
  std::map<int, SparseVec> rows_;
};

/// Basis of the kernel of the linear map sending the i-th standard basis
/// vector of the domain to images[i].
std::vector<SparseVec> kernel_basis(const std::vector<SparseVec>& images, Field field);

/// Rank of the span of the given vectors.
std::size_t span_rank(const std::vector<SparseVec>& vectors);

}  // namespace powerhom
