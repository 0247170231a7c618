#include "algdyn/newton_polygon.hpp"

#include <algorithm>

#include "algdyn/errors.hpp"

namespace algdyn {

std::vector<Rat> NewtonPolygon::root_valuations() const {
  std::vector<Rat> out;
  for (const auto& s : segments)
    for (long i = 0; i < s.length; ++i) out.push_back(-s.slope);
  std::sort(out.begin(), out.end());
  return out;
}

NewtonPolygon newton_polygon(const RatPoly& f, const Int& p) {
  if (f.is_zero()) throw DomainError("zero polynomial");
  if (f.coeff(0) == 0) throw DomainError("zero root present");
  std::vector<std::pair<long, long>> pts;  // (i, v_p(a_i))
  for (int i = 0; i <= f.degree(); ++i)
    if (f.coeff(i) != 0) pts.emplace_back(i, valuation(f.coeff(i), p));

  // Andrew's monotone chain, lower hull only; points are already sorted by i.
  std::vector<std::pair<long, long>> hull;
  for (const auto& pt : pts) {
    while (hull.size() >= 2) {
      const auto& a = hull[hull.size() - 2];
      const auto& b = hull.back();
      // Drop b unless it lies strictly below segment a--pt.
      Int cross = Int(b.first - a.first) * Int(pt.second - a.second) -
                  Int(b.second - a.second) * Int(pt.first - a.first);
      if (cross <= 0)
        hull.pop_back();
      else
        break;
    }
    hull.push_back(pt);
  }
  NewtonPolygon np;
  np.prime = p;
  for (std::size_t i = 1; i < hull.size(); ++i) {
    long len = hull[i].first - hull[i - 1].first;
    np.segments.push_back({Rat(hull[i].second - hull[i - 1].second, len), len});
    np.segments.back().slope.canonicalize();
  }
  return np;
}

}  // namespace algdyn
