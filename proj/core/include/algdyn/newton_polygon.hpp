#pragma once

#include <vector>

#include "algdyn/poly.hpp"

namespace algdyn {

struct NewtonSegment {
  Rat slope;
  long length;
};

struct NewtonPolygon {
  Int prime;
  /// Lower convex hull of (i, v_p(a_i)), slopes strictly increasing.
  std::vector<NewtonSegment> segments;

  /// Valuations of the roots with multiplicity, ascending (the negated slopes).
  std::vector<Rat> root_valuations() const;
};

/// Throws DomainError("zero root present") when f(0) = 0.
NewtonPolygon newton_polygon(const RatPoly& f, const Int& p);

}  // namespace algdyn
