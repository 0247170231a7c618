#include "algdyn/jordan.hpp"

#include "algdyn/errors.hpp"
#include "algdyn/subspace.hpp"

namespace algdyn {

JordanChevalley jordan_chevalley(const QMatrix& m) {
  if (!m.is_square()) throw DomainError("jordan_chevalley: non-square matrix");
  if (determinant(m) == 0) throw DomainError("jordan_chevalley: singular matrix");
  RatPoly s = squarefree_part(minpoly(m));
  RatPoly ds = s.derivative();
  QMatrix d = m;
  for (std::size_t iter = 0; iter < 64; ++iter) {
    QMatrix sd = evaluate(s, d);
    if (sd.is_zero()) {
      QMatrix u = inverse(d) * m;
      return {d, u};
    }
    d = d - sd * inverse(evaluate(ds, d));
  }
  throw Error("jordan_chevalley: Newton iteration did not converge");
}

std::vector<QMatrix> commutant(const std::vector<QMatrix>& generators) {
  if (generators.empty()) throw DomainError("commutant: no generators");
  std::size_t m = generators.front().rows();
  for (const auto& g : generators)
    if (!g.is_square() || g.rows() != m) throw DomainError("commutant: dimension mismatch");
  std::size_t n2 = m * m;
  QMatrix sys(generators.size() * n2, n2);
  // (B A - A B)_{ik} = sum_j B_ij A_jk - A_ij B_jk; unknown B_ij at index i*m+j.
  for (std::size_t g = 0; g < generators.size(); ++g) {
    const QMatrix& a = generators[g];
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t k = 0; k < m; ++k) {
        std::size_t row = g * n2 + i * m + k;
        for (std::size_t j = 0; j < m; ++j) {
          sys(row, i * m + j) += a(j, k);
          sys(row, j * m + k) -= a(i, j);
        }
      }
  }
  QSubspace ker = QSubspace::kernel_of(sys);
  std::vector<QMatrix> out;
  for (const auto& v : ker.basis()) out.push_back(unflatten(v, m, m));
  return out;
}

}  // namespace algdyn
