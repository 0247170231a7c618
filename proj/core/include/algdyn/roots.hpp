#pragma once

#include <vector>

#include "algdyn/interval.hpp"
#include "algdyn/poly.hpp"

namespace algdyn {

/// Enclosure of one complex root; `real` roots have a degenerate imaginary part.
struct RootBox {
  bool real = false;
  ComplexInterval box;
};

/// Certified isolation of all roots of a squarefree polynomial: each box
/// contains exactly one root, real roots are separated from complex pairs,
/// and only the upper member of each conjugate pair is listed.
struct IsolatedRoots {
  std::vector<RootBox> real;   // ascending
  std::vector<RootBox> upper;  // Im > 0, ordered by (Re, Im)
  mpfr_prec_t precision = 0;
};

/// Box half-widths end up below 2^-(prec - 8). Throws CertificationError when
/// the inclusion test keeps failing after escalation.
IsolatedRoots isolate_roots(const RatPoly& f, mpfr_prec_t prec);

Interval evaluate(const RatPoly& h, const Interval& x);
ComplexInterval evaluate(const RatPoly& h, const ComplexInterval& z);

/// log |h(z)| over the box; throws CertificationError when |h| may vanish.
Interval log_abs(const RatPoly& h, const RootBox& root);

}  // namespace algdyn
