#pragma once

#include "algdyn/action.hpp"
#include "algdyn/numberfield.hpp"

namespace fixtures {

using namespace algdyn;

inline RatPoly P(std::vector<long> c) { return RatPoly::from_ints(c); }

inline QMatrix M(std::initializer_list<std::initializer_list<long>> rows) { return QMatrix::from_ints(rows); }

/// a + b*sqrt(2) on the basis (1, sqrt 2).
inline QMatrix sqrt2(long a, long b) { return M({{a, 2 * b}, {b, a}}); }

inline SolenoidAction times23() { return SolenoidAction::make({M({{2}}), M({{3}})}, "x2x3"); }

/// Multiplication by 2i and by 3 on Q(i), in the basis (1, i).
inline SolenoidAction alpha2() { return SolenoidAction::make({M({{0, -2}, {2, 0}}), M({{3, 0}, {0, 3}})}, "alpha2"); }

/// (theta, theta^2) with theta the golden ratio.
inline SolenoidAction golden() {
  QMatrix c = QMatrix::companion(P({-1, -1, 1}));
  return SolenoidAction::make({c, c * c}, "golden");
}

/// (i, 2) on Q(i).
inline SolenoidAction gaussian_twist() {
  return SolenoidAction::make({QMatrix::companion(P({1, 0, 1})), QMatrix::scalar(2, 2)}, "gaussian");
}

/// (1 + sqrt 2, 3 + sqrt 2) on Q(sqrt 2).
inline SolenoidAction sqrt2_units() { return SolenoidAction::make({sqrt2(1, 1), sqrt2(3, 1)}, "sqrt2"); }

inline SolenoidAction direct_sum(const SolenoidAction& a, const SolenoidAction& b) {
  std::vector<QMatrix> gens;
  for (std::size_t j = 0; j < a.d; ++j) gens.push_back(block_diag(a.generators[j], b.generators[j]));
  return SolenoidAction::make(std::move(gens));
}

}  // namespace fixtures
