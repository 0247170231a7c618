#include "algdyn/qmatrix.hpp"

#include <algorithm>
#include <sstream>

#include "algdyn/errors.hpp"

namespace algdyn {

QMatrix::QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

QMatrix QMatrix::identity(std::size_t n) { return scalar(n, Rat(1)); }

QMatrix QMatrix::scalar(std::size_t n, const Rat& c) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = c;
  return m;
}

QMatrix QMatrix::from_rows(const std::vector<RatVec>& rows) {
  if (rows.empty()) return {};
  QMatrix m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols_) throw DomainError("ragged matrix rows");
    for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

QMatrix QMatrix::from_ints(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<RatVec> rs;
  for (const auto& r : rows) {
    RatVec v;
    for (long x : r) v.emplace_back(x);
    rs.push_back(std::move(v));
  }
  return from_rows(rs);
}

QMatrix QMatrix::from_columns(const std::vector<RatVec>& cols, std::size_t rows) {
  QMatrix m(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows) throw DomainError("column length mismatch");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

QMatrix QMatrix::companion(const RatPoly& f) {
  if (f.degree() < 1 || f.leading() != 1) throw DomainError("companion needs a monic polynomial of degree >= 1");
  auto n = static_cast<std::size_t>(f.degree());
  QMatrix m(n, n);
  for (std::size_t i = 1; i < n; ++i) m(i, i - 1) = 1;
  for (std::size_t i = 0; i < n; ++i) m(i, n - 1) = -f.coeff(static_cast<int>(i));
  return m;
}

bool QMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rat& x) { return x == 0; });
}

bool QMatrix::is_identity() const { return is_square() && *this == identity(rows_); }

RatVec QMatrix::row(std::size_t i) const {
  return RatVec(data_.begin() + static_cast<long>(i * cols_), data_.begin() + static_cast<long>((i + 1) * cols_));
}

RatVec QMatrix::col(std::size_t j) const {
  RatVec v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

QMatrix QMatrix::transpose() const {
  QMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

RatVec QMatrix::apply(const RatVec& v) const {
  if (v.size() != cols_) throw DomainError("matrix-vector size mismatch");
  RatVec out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    Rat acc(0);
    for (std::size_t j = 0; j < cols_; ++j)
      if ((*this)(i, j) != 0 && v[j] != 0) acc += (*this)(i, j) * v[j];
    out[i] = acc;
  }
  return out;
}

QMatrix QMatrix::pow(long e) const {
  if (!is_square()) throw DomainError("power of non-square matrix");
  QMatrix base = e < 0 ? inverse(*this) : *this;
  unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
  QMatrix result = identity(rows_);
  while (k) {
    if (k & 1ul) result = result * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return result;
}

QMatrix& QMatrix::operator+=(const QMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DomainError("matrix size mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

QMatrix& QMatrix::operator-=(const QMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DomainError("matrix size mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

QMatrix& QMatrix::operator*=(const Rat& c) {
  for (auto& x : data_) x *= c;
  return *this;
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
  if (a.cols_ != b.rows_) throw DomainError("matrix product size mismatch");
  QMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rat& x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (b(k, j) != 0) c(i, j) += x * b(k, j);
    }
  return c;
}

std::string QMatrix::str() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << to_string((*this)(i, j));
    os << "]";
  }
  os << "]";
  return os.str();
}

QMatrix rref(const QMatrix& m, std::vector<std::size_t>* pivots) {
  QMatrix a = m;
  std::vector<std::size_t> piv;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t sel = r;
    while (sel < a.rows() && a(sel, c) == 0) ++sel;
    if (sel == a.rows()) continue;
    if (sel != r)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(sel, j), a(r, j));
    Rat inv = Rat(1) / a(r, c);
    for (std::size_t j = c; j < a.cols(); ++j) a(r, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c) == 0) continue;
      Rat f = a(i, c);
      for (std::size_t j = c; j < a.cols(); ++j)
        if (a(r, j) != 0) a(i, j) -= f * a(r, j);
    }
    piv.push_back(c);
    ++r;
  }
  if (pivots) *pivots = std::move(piv);
  return a;
}

std::size_t rank(const QMatrix& m) {
  std::vector<std::size_t> piv;
  rref(m, &piv);
  return piv.size();
}

Rat determinant(const QMatrix& m) {
  if (!m.is_square()) throw DomainError("determinant of non-square matrix");
  QMatrix a = m;
  std::size_t n = a.rows();
  Rat det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t sel = c;
    while (sel < n && a(sel, c) == 0) ++sel;
    if (sel == n) return Rat(0);
    if (sel != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(sel, j), a(c, j));
      det = -det;
    }
    det *= a(c, c);
    Rat inv = Rat(1) / a(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a(i, c) == 0) continue;
      Rat f = a(i, c) * inv;
      for (std::size_t j = c; j < n; ++j) a(i, j) -= f * a(c, j);
    }
  }
  return det;
}

QMatrix inverse(const QMatrix& m) {
  if (!m.is_square()) throw DomainError("inverse of non-square matrix");
  std::size_t n = m.rows();
  QMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  std::vector<std::size_t> piv;
  QMatrix r = rref(aug, &piv);
  if (piv.size() < n || piv[n - 1] != n - 1) throw DomainError("singular matrix");
  QMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = r(i, n + j);
  return out;
}

std::vector<RatVec> kernel(const QMatrix& m) {
  std::vector<std::size_t> piv;
  QMatrix r = rref(m, &piv);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : piv) is_pivot[p] = true;
  std::vector<RatVec> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    RatVec v(m.cols());
    v[f] = 1;
    for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -r(i, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<RatVec> solve(const QMatrix& a, const RatVec& b) {
  if (b.size() != a.rows()) throw DomainError("solve: size mismatch");
  QMatrix aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  std::vector<std::size_t> piv;
  QMatrix r = rref(aug, &piv);
  if (!piv.empty() && piv.back() == a.cols()) return std::nullopt;
  RatVec x(a.cols());
  for (std::size_t i = 0; i < piv.size(); ++i) x[piv[i]] = r(i, a.cols());
  return x;
}

QMatrix block_diag(const QMatrix& a, const QMatrix& b) {
  QMatrix m(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) m(a.rows() + i, a.cols() + j) = b(i, j);
  return m;
}

bool commute(const QMatrix& a, const QMatrix& b) { return a * b == b * a; }

QMatrix evaluate(const RatPoly& p, const QMatrix& m) {
  if (!m.is_square()) throw DomainError("evaluate: non-square matrix");
  QMatrix acc(m.rows(), m.cols());
  for (int i = p.degree(); i >= 0; --i) {
    acc = acc * m;
    Rat c = p.coeff(i);
    if (c != 0)
      for (std::size_t k = 0; k < m.rows(); ++k) acc(k, k) += c;
  }
  return acc;
}

RatPoly charpoly(const QMatrix& m) {
  if (!m.is_square()) throw DomainError("charpoly of non-square matrix");
  std::size_t n = m.rows();
  if (n == 0) return RatPoly::constant(Rat(1));
  // Coefficients in descending order of x.
  std::vector<Rat> vect{Rat(1), -m(0, 0)};
  for (std::size_t r = 1; r < n; ++r) {
    // Toeplitz column: 1, -a, -R C, -R A C, ..., -R A^{r-1} C
    std::vector<Rat> t(r + 2);
    t[0] = 1;
    t[1] = -m(r, r);
    RatVec c(r);
    for (std::size_t i = 0; i < r; ++i) c[i] = m(i, r);
    for (std::size_t k = 0; k < r; ++k) {
      Rat acc(0);
      for (std::size_t j = 0; j < r; ++j) acc += m(r, j) * c[j];
      t[k + 2] = -acc;
      RatVec nc(r);
      for (std::size_t i = 0; i < r; ++i) {
        Rat s(0);
        for (std::size_t j = 0; j < r; ++j)
          if (m(i, j) != 0 && c[j] != 0) s += m(i, j) * c[j];
        nc[i] = s;
      }
      c = std::move(nc);
    }
    std::vector<Rat> next(r + 2);
    for (std::size_t i = 0; i < r + 2; ++i) {
      Rat s(0);
      for (std::size_t j = 0; j <= std::min(i, r); ++j) s += t[i - j] * vect[j];
      next[i] = s;
    }
    vect = std::move(next);
  }
  std::reverse(vect.begin(), vect.end());
  return RatPoly(std::move(vect));
}

RatPoly minpoly_of_vector(const QMatrix& m, const RatVec& v) {
  if (is_zero_vector(v)) return RatPoly::constant(Rat(1));
  // Krylov sequence reduced incrementally; coefficients track the combination.
  std::size_t n = m.rows();
  std::vector<RatVec> rows;            // reduced vectors
  std::vector<std::size_t> pivot_of;   // pivot index per row
  std::vector<RatPoly> combo;          // polynomial producing each reduced row
  RatVec w = v;
  RatPoly pw = RatPoly::constant(Rat(1));
  for (std::size_t k = 0; k <= n; ++k) {
    RatVec r = w;
    RatPoly pr = pw;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      Rat f = r[pivot_of[i]];
      if (f == 0) continue;
      for (std::size_t j = 0; j < n; ++j) r[j] -= f * rows[i][j];
      pr -= combo[i] * f;
    }
    std::size_t piv = 0;
    while (piv < n && r[piv] == 0) ++piv;
    if (piv == n) return pr.monic();
    Rat inv = Rat(1) / r[piv];
    for (auto& x : r) x *= inv;
    rows.push_back(std::move(r));
    pivot_of.push_back(piv);
    combo.push_back(pr * inv);
    w = m.apply(w);
    pw = pw * RatPoly::x();
  }
  throw Error("minpoly_of_vector: Krylov sequence did not terminate");
}

RatPoly minpoly(const QMatrix& m) {
  if (!m.is_square()) throw DomainError("minpoly of non-square matrix");
  std::size_t n = m.rows();
  RatPoly acc = RatPoly::constant(Rat(1));
  for (std::size_t i = 0; i < n; ++i) {
    RatVec e(n);
    e[i] = 1;
    RatVec w = evaluate(acc, m).apply(e);
    if (is_zero_vector(w)) continue;
    acc = acc * minpoly_of_vector(m, w);
  }
  return acc.monic();
}

RatVec flatten(const QMatrix& m) { return m.data(); }

QMatrix unflatten(const RatVec& v, std::size_t rows, std::size_t cols) {
  if (v.size() != rows * cols) throw DomainError("unflatten: size mismatch");
  QMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = v[i * cols + j];
  return m;
}

bool is_zero_vector(const RatVec& v) {
  return std::all_of(v.begin(), v.end(), [](const Rat& x) { return x == 0; });
}

}  // namespace algdyn
