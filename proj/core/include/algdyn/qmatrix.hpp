#pragma once

#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "algdyn/poly.hpp"

namespace algdyn {

/// Dense rational matrix, row-major.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols);

  static QMatrix identity(std::size_t n);
  static QMatrix scalar(std::size_t n, const Rat& c);
  static QMatrix from_rows(const std::vector<RatVec>& rows);
  static QMatrix from_ints(std::initializer_list<std::initializer_list<long>> rows);
  /// Columns are the given vectors.
  static QMatrix from_columns(const std::vector<RatVec>& cols, std::size_t rows);
  /// Companion matrix of a monic polynomial: multiplication by x on the power basis.
  static QMatrix companion(const RatPoly& f);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool is_zero() const;
  bool is_identity() const;

  Rat& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rat& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  RatVec row(std::size_t i) const;
  RatVec col(std::size_t j) const;
  /// Row-major entries.
  const std::vector<Rat>& data() const { return data_; }

  QMatrix transpose() const;
  RatVec apply(const RatVec& v) const;
  /// Negative exponents use the exact inverse.
  QMatrix pow(long e) const;

  QMatrix& operator+=(const QMatrix& o);
  QMatrix& operator-=(const QMatrix& o);
  QMatrix& operator*=(const Rat& c);
  friend QMatrix operator+(QMatrix a, const QMatrix& b) { return a += b; }
  friend QMatrix operator-(QMatrix a, const QMatrix& b) { return a -= b; }
  friend QMatrix operator*(QMatrix a, const Rat& c) { return a *= c; }
  friend QMatrix operator*(const Rat& c, QMatrix a) { return a *= c; }
  friend QMatrix operator*(const QMatrix& a, const QMatrix& b);
  friend bool operator==(const QMatrix& a, const QMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  std::string str() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rat> data_;
};

/// Reduced row echelon form; `pivots` receives the pivot column of each nonzero row.
QMatrix rref(const QMatrix& m, std::vector<std::size_t>* pivots = nullptr);
std::size_t rank(const QMatrix& m);
Rat determinant(const QMatrix& m);
/// Throws DomainError when singular.
QMatrix inverse(const QMatrix& m);
/// Basis of {x : m x = 0}, one vector per free column.
std::vector<RatVec> kernel(const QMatrix& m);
std::optional<RatVec> solve(const QMatrix& a, const RatVec& b);

QMatrix block_diag(const QMatrix& a, const QMatrix& b);
bool commute(const QMatrix& a, const QMatrix& b);
QMatrix evaluate(const RatPoly& p, const QMatrix& m);

/// det(xI - M), via the division-free Berkowitz recurrence.
RatPoly charpoly(const QMatrix& m);
/// Monic generator of {p : p(M) = 0}.
RatPoly minpoly(const QMatrix& m);
/// Monic generator of {p : p(M) v = 0}.
RatPoly minpoly_of_vector(const QMatrix& m, const RatVec& v);

/// Flattens row-major; inverse of unflatten.
RatVec flatten(const QMatrix& m);
QMatrix unflatten(const RatVec& v, std::size_t rows, std::size_t cols);

bool is_zero_vector(const RatVec& v);

}  // namespace algdyn
