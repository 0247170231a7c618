#pragma once

#include <optional>

#include "algdyn/qmatrix.hpp"

namespace algdyn {

/// Exact phase-one simplex with Bland's rule: some x >= 0 with A x = b, or
/// nullopt when the system is infeasible.
std::optional<RatVec> find_nonnegative_solution(const QMatrix& a, const RatVec& b);

/// Some n with a_i . n <= -1 for every row a_i of `strict` and e_k . n = 0 for
/// every row e_k of `equal`; nullopt when infeasible. Variables are free.
std::optional<RatVec> find_strict_direction(const QMatrix& strict, const QMatrix& equal);

}  // namespace algdyn
