#pragma once

#include <vector>

#include "algdyn/qmatrix.hpp"

namespace algdyn {

struct JordanChevalley {
  QMatrix semisimple;  // D
  QMatrix unipotent;   // U, with M = D U = U D
};

/// Multiplicative Jordan-Chevalley decomposition of an invertible matrix,
/// computed over Q by Newton iteration on the squarefree part of the
/// minimal polynomial. Throws DomainError for singular input.
JordanChevalley jordan_chevalley(const QMatrix& m);

/// Basis of {B : B A_j = A_j B for all j}, echelonized over the m^2 entries.
std::vector<QMatrix> commutant(const std::vector<QMatrix>& generators);

}  // namespace algdyn
