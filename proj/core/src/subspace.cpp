#include "algdyn/subspace.hpp"

#include "algdyn/errors.hpp"

namespace algdyn {

QSubspace QSubspace::span(const std::vector<RatVec>& vectors, std::size_t ambient) {
  QSubspace s(ambient);
  if (vectors.empty()) return s;
  QMatrix m(vectors.size(), ambient);
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (vectors[i].size() != ambient) throw DomainError("span: vector length mismatch");
    for (std::size_t j = 0; j < ambient; ++j) m(i, j) = vectors[i][j];
  }
  std::vector<std::size_t> piv;
  QMatrix r = rref(m, &piv);
  for (std::size_t i = 0; i < piv.size(); ++i) s.basis_.push_back(r.row(i));
  s.pivots_ = std::move(piv);
  return s;
}

QSubspace QSubspace::whole(std::size_t ambient) {
  std::vector<RatVec> e;
  for (std::size_t i = 0; i < ambient; ++i) {
    RatVec v(ambient);
    v[i] = 1;
    e.push_back(std::move(v));
  }
  return span(e, ambient);
}

QSubspace QSubspace::kernel_of(const QMatrix& m) { return span(kernel(m), m.cols()); }

QSubspace QSubspace::image_of(const QMatrix& m) {
  std::vector<RatVec> cols;
  for (std::size_t j = 0; j < m.cols(); ++j) cols.push_back(m.col(j));
  return span(cols, m.rows());
}

std::vector<std::size_t> QSubspace::free_columns() const {
  std::vector<bool> piv(ambient_, false);
  for (auto p : pivots_) piv[p] = true;
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < ambient_; ++j)
    if (!piv[j]) out.push_back(j);
  return out;
}

RatVec QSubspace::reduce(const RatVec& v) const {
  RatVec r = v;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    Rat f = r[pivots_[i]];
    if (f == 0) continue;
    for (std::size_t j = 0; j < ambient_; ++j)
      if (basis_[i][j] != 0) r[j] -= f * basis_[i][j];
  }
  return r;
}

bool QSubspace::contains(const RatVec& v) const { return is_zero_vector(reduce(v)); }

bool QSubspace::contains(const QSubspace& o) const {
  for (const auto& v : o.basis_)
    if (!contains(v)) return false;
  return true;
}

RatVec QSubspace::coordinates(const RatVec& v) const {
  RatVec c(basis_.size());
  for (std::size_t i = 0; i < basis_.size(); ++i) c[i] = v[pivots_[i]];
  return c;
}

bool QSubspace::is_invariant(const QMatrix& m) const {
  for (const auto& v : basis_)
    if (!contains(m.apply(v))) return false;
  return true;
}

QMatrix QSubspace::restrict(const QMatrix& m) const {
  QMatrix r(dim(), dim());
  for (std::size_t j = 0; j < dim(); ++j) {
    RatVec w = m.apply(basis_[j]);
    if (!contains(w)) throw DomainError("restrict: subspace is not invariant");
    RatVec c = coordinates(w);
    for (std::size_t i = 0; i < dim(); ++i) r(i, j) = c[i];
  }
  return r;
}

QMatrix QSubspace::quotient(const QMatrix& m) const {
  auto free = free_columns();
  QMatrix q(free.size(), free.size());
  for (std::size_t j = 0; j < free.size(); ++j) {
    RatVec e(ambient_);
    e[free[j]] = 1;
    RatVec w = reduce(m.apply(e));
    for (std::size_t i = 0; i < free.size(); ++i) q(i, j) = w[free[i]];
  }
  return q;
}

QMatrix QSubspace::basis_matrix() const { return QMatrix::from_columns(basis_, ambient_); }

QSubspace QSubspace::sum(const QSubspace& o) const {
  std::vector<RatVec> all = basis_;
  all.insert(all.end(), o.basis_.begin(), o.basis_.end());
  return span(all, ambient_);
}

QSubspace QSubspace::intersect(const QSubspace& o) const {
  if (is_zero() || o.is_zero()) return QSubspace(ambient_);
  // Solve a*B1 = b*B2: kernel of [B1 | -B2] as columns.
  std::size_t d1 = dim(), d2 = o.dim();
  QMatrix m(ambient_, d1 + d2);
  for (std::size_t j = 0; j < d1; ++j)
    for (std::size_t i = 0; i < ambient_; ++i) m(i, j) = basis_[j][i];
  for (std::size_t j = 0; j < d2; ++j)
    for (std::size_t i = 0; i < ambient_; ++i) m(i, d1 + j) = -o.basis_[j][i];
  std::vector<RatVec> vecs;
  for (const auto& k : kernel(m)) {
    RatVec v(ambient_);
    for (std::size_t j = 0; j < d1; ++j)
      if (k[j] != 0)
        for (std::size_t i = 0; i < ambient_; ++i) v[i] += k[j] * basis_[j][i];
    vecs.push_back(std::move(v));
  }
  return span(vecs, ambient_);
}

QSubspace QSubspace::map(const QMatrix& m) const {
  std::vector<RatVec> imgs;
  for (const auto& v : basis_) imgs.push_back(m.apply(v));
  return span(imgs, m.rows());
}

}  // namespace algdyn
