#pragma once

#include <vector>

#include "algdyn/qmatrix.hpp"

namespace algdyn {

/// Rational subspace of Q^m stored by its reduced row echelon basis, which is
/// unique per subspace so equality is plain comparison.
class QSubspace {
 public:
  QSubspace() = default;
  explicit QSubspace(std::size_t ambient) : ambient_(ambient) {}

  static QSubspace span(const std::vector<RatVec>& vectors, std::size_t ambient);
  static QSubspace whole(std::size_t ambient);
  static QSubspace kernel_of(const QMatrix& m);
  static QSubspace image_of(const QMatrix& m);

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  bool is_zero() const { return basis_.empty(); }
  bool is_whole() const { return basis_.size() == ambient_; }
  const std::vector<RatVec>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  /// Columns without a pivot; the standard vectors there span a complement.
  std::vector<std::size_t> free_columns() const;

  bool contains(const RatVec& v) const;
  bool contains(const QSubspace& o) const;
  /// Reduces v modulo the subspace, clearing every pivot entry.
  RatVec reduce(const RatVec& v) const;
  /// Coordinates of a member in the echelon basis (its pivot entries).
  RatVec coordinates(const RatVec& v) const;

  bool is_invariant(const QMatrix& m) const;
  /// Matrix of m restricted to the subspace, in the echelon basis.
  QMatrix restrict(const QMatrix& m) const;
  /// Matrix of m on Q^m / this, in the basis of free-column standard vectors.
  QMatrix quotient(const QMatrix& m) const;

  /// Basis as columns of an (ambient x dim) matrix.
  QMatrix basis_matrix() const;

  QSubspace sum(const QSubspace& o) const;
  QSubspace intersect(const QSubspace& o) const;
  /// Image under a linear map to another space.
  QSubspace map(const QMatrix& m) const;

  friend bool operator==(const QSubspace& a, const QSubspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  std::size_t ambient_ = 0;
  std::vector<RatVec> basis_;
  std::vector<std::size_t> pivots_;
};

}  // namespace algdyn
