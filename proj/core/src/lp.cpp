#include "algdyn/lp.hpp"

#include "algdyn/errors.hpp"

namespace algdyn {

std::optional<RatVec> find_nonnegative_solution(const QMatrix& a, const RatVec& b) {
  std::size_t m = a.rows(), n = a.cols();
  if (b.size() != m) throw DomainError("find_nonnegative_solution: size mismatch");
  // Tableau columns: n originals, m artificials, rhs.
  std::size_t cols = n + m + 1;
  QMatrix t(m + 1, cols);
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    Rat s = b[i] < 0 ? Rat(-1) : Rat(1);
    for (std::size_t j = 0; j < n; ++j) t(i, j) = a(i, j) * s;
    t(i, n + i) = 1;
    t(i, cols - 1) = b[i] * s;
    basis[i] = n + i;
  }
  // Objective row: minimize the sum of artificials, expressed in nonbasic terms.
  for (std::size_t j = 0; j < cols; ++j) {
    if (j >= n && j < n + m) continue;
    Rat s(0);
    for (std::size_t i = 0; i < m; ++i) s += t(i, j);
    t(m, j) = -s;
  }
  for (;;) {
    std::size_t enter = cols;
    for (std::size_t j = 0; j + 1 < cols; ++j)
      if (t(m, j) < 0) {
        enter = j;
        break;
      }
    if (enter == cols) break;
    std::size_t leave = m;
    Rat best;
    for (std::size_t i = 0; i < m; ++i) {
      if (t(i, enter) <= 0) continue;
      Rat ratio = t(i, cols - 1) / t(i, enter);
      if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == m) break;  // unbounded direction cannot occur in phase one
    Rat piv = t(leave, enter);
    for (std::size_t j = 0; j < cols; ++j) t(leave, j) /= piv;
    for (std::size_t i = 0; i <= m; ++i) {
      if (i == leave || t(i, enter) == 0) continue;
      Rat f = t(i, enter);
      for (std::size_t j = 0; j < cols; ++j)
        if (t(leave, j) != 0) t(i, j) -= f * t(leave, j);
    }
    basis[leave] = enter;
  }
  if (t(m, cols - 1) != 0) return std::nullopt;
  RatVec x(n);
  for (std::size_t i = 0; i < m; ++i)
    if (basis[i] < n) x[basis[i]] = t(i, cols - 1);
  return x;
}

std::optional<RatVec> find_strict_direction(const QMatrix& strict, const QMatrix& equal) {
  std::size_t d = strict.rows() ? strict.cols() : equal.cols();
  std::size_t k = strict.rows(), e = equal.rows();
  // Variables: n+ (d), n- (d), slack (k).
  QMatrix a(k + e, 2 * d + k);
  RatVec b(k + e);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      a(i, j) = strict(i, j);
      a(i, d + j) = -strict(i, j);
    }
    a(i, 2 * d + i) = 1;
    b[i] = -1;
  }
  for (std::size_t i = 0; i < e; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      a(k + i, j) = equal(i, j);
      a(k + i, d + j) = -equal(i, j);
    }
  auto sol = find_nonnegative_solution(a, b);
  if (!sol) return std::nullopt;
  RatVec n(d);
  for (std::size_t j = 0; j < d; ++j) n[j] = (*sol)[j] - (*sol)[d + j];
  return n;
}

}  // namespace algdyn
