#include "algdyn/weights.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "algdyn/errors.hpp"
#include "algdyn/lp.hpp"
#include "algdyn/newton_polygon.hpp"
#include "algdyn/primes.hpp"

namespace algdyn {

std::string Place::label() const {
  switch (kind) {
    case PlaceKind::Real:
      return "real:" + std::to_string(index);
    case PlaceKind::Complex:
      return "complex:" + std::to_string(index);
    case PlaceKind::PAdic:
      return "p=" + prime.get_str() + ":" + std::to_string(index);
  }
  return {};
}

Interval log_prime(const Int& p, mpfr_prec_t bits) { return Interval::log_of(Rat(p), bits); }

namespace {

void add_primes(const Int& z, std::set<Int>& out) {
  if (z == 0) return;
  for (const auto& p : prime_divisors(z)) out.insert(p);
}

IntVec unit_vector(std::size_t d, std::size_t j) {
  IntVec e(d, 0);
  e[j] = 1;
  return e;
}

}  // namespace

BadPlaceSet bad_primes(const SolenoidAction& action) {
  std::set<Int> primes;
  for (const auto& g : action.generators) {
    for (const auto& x : g.data()) add_primes(x.get_den(), primes);
    QMatrix gi = inverse(g);
    for (const auto& x : gi.data()) add_primes(x.get_den(), primes);
  }
  return {std::vector<Int>(primes.begin(), primes.end())};
}

std::vector<Int> block_primes(const NumberFieldAction& nf) {
  std::set<Int> primes;
  for (std::size_t j = 0; j < nf.rank(); ++j) {
    RatPoly c = element_charpoly(nf, unit_vector(nf.rank(), j));
    for (const auto& a : c.coeffs()) add_primes(a.get_den(), primes);
    add_primes(c.coeff(0).get_num(), primes);
  }
  return {primes.begin(), primes.end()};
}

Tri unit_modulus(const RatPoly& f, const RatPoly& a, const RootBox& root) {
  RatPoly ar = a % f;
  if (root.real) {
    bool pm1 = ar == RatPoly::constant(Rat(1)) || ar == RatPoly::constant(Rat(-1));
    return pm1 ? Tri::Yes : Tri::No;
  }
  RatPoly c = element_minpoly({f, ar});
  int e = c.degree();
  // P(x) = Res_y(c(y), y^e c(x/y)) vanishes exactly at the products of two roots of c.
  std::vector<Rat> xs, ys;
  for (int t = 0; t <= e * e; ++t) {
    Rat x(t);
    std::vector<Rat> q(static_cast<std::size_t>(e) + 1);
    Rat xp(1);
    for (int i = 0; i <= e; ++i) {
      q[static_cast<std::size_t>(e - i)] = c.coeff(i) * xp;
      xp *= x;
    }
    RatPoly qy(std::move(q));
    xs.push_back(x);
    ys.push_back(qy.is_zero() ? Rat(0) : resultant(c, qy));
  }
  RatPoly p = interpolate(xs, ys);
  if (p(Rat(1)) != 0) return Tri::No;
  Interval j = evaluate(ar, root.box).norm();
  Rat lo = j.lo_rat(), hi = j.hi_rat();
  Rat pad = (hi - lo) + Rat(1, Int(1) << 400);
  lo -= pad;
  hi += pad;
  if (!(lo < 1 && 1 <= hi)) return Tri::No;
  return count_real_roots(squarefree_part(p), lo, hi) == 1 ? Tri::Yes : Tri::Unknown;
}

std::vector<WeightVector> archimedean_weights(const NumberFieldAction& nf, const IsolatedRoots& roots) {
  std::vector<WeightVector> out;
  auto make = [&](const RootBox& rb, PlaceKind kind, std::size_t idx) {
    WeightVector w;
    w.place.kind = kind;
    w.place.index = idx;
    w.delta = kind == PlaceKind::Real ? 1 : 2;
    bool all_unit = true;
    for (const auto& g : nf.multipliers) {
      w.entries.push_back(log_abs(g, rb));
      if (unit_modulus(nf.f, g, rb) != Tri::Yes) all_unit = false;
    }
    w.zero = all_unit;
    out.push_back(std::move(w));
  };
  for (std::size_t i = 0; i < roots.real.size(); ++i) make(roots.real[i], PlaceKind::Real, i);
  for (std::size_t i = 0; i < roots.upper.size(); ++i) make(roots.upper[i], PlaceKind::Complex, i);
  return out;
}

std::vector<WeightVector> archimedean_weights(const NumberFieldAction& nf, const WeightConfig& cfg) {
  return archimedean_weights(nf, isolate_roots(nf.f, cfg.bits + 32));
}

namespace {

using Tuple = std::vector<Rat>;

std::vector<Rat> valuations_along(const NumberFieldAction& nf, const IntVec& n, const Int& p) {
  return newton_polygon(element_charpoly(nf, n), p).root_valuations();
}

std::optional<std::vector<Tuple>> decode(const NumberFieldAction& nf, const Int& p, const IntVec& n,
                                         const std::vector<std::vector<Rat>>& marg) {
  std::size_t d = marg.size();
  std::vector<std::vector<Rat>> distinct(d);
  for (std::size_t j = 0; j < d; ++j) {
    distinct[j] = marg[j];
    distinct[j].erase(std::unique(distinct[j].begin(), distinct[j].end()), distinct[j].end());
  }
  std::map<Rat, Tuple> image;
  Tuple cur(d);
  bool injective = true;
  std::function<void(std::size_t, Rat)> walk = [&](std::size_t j, Rat acc) {
    if (!injective) return;
    if (j == d) {
      auto [it, fresh] = image.emplace(acc, cur);
      if (!fresh) injective = false;
      return;
    }
    for (const auto& v : distinct[j]) {
      cur[j] = v;
      walk(j + 1, acc + v * n[j]);
    }
  };
  walk(0, Rat(0));
  if (!injective) return std::nullopt;
  std::vector<Tuple> vectors;
  for (const auto& v : valuations_along(nf, n, p)) {
    auto it = image.find(v);
    if (it == image.end()) return std::nullopt;
    vectors.push_back(it->second);
  }
  for (std::size_t j = 0; j < d; ++j) {
    std::vector<Rat> col;
    for (const auto& t : vectors) col.push_back(t[j]);
    std::sort(col.begin(), col.end());
    if (col != marg[j]) return std::nullopt;
  }
  return vectors;
}

}  // namespace

std::vector<WeightVector> padic_weights(const NumberFieldAction& nf, const Int& p, const WeightConfig& cfg) {
  std::size_t d = nf.rank();
  std::vector<std::vector<Rat>> marg(d);
  for (std::size_t j = 0; j < d; ++j) marg[j] = valuations_along(nf, unit_vector(d, j), p);

  std::vector<IntVec> directions;
  if (d == 1) {
    directions.push_back({1});
  } else {
    SeededInts rng(cfg.seed ^ 0x5eedULL);
    for (int attempt = 0; attempt < 8; ++attempt) {
      IntVec n(d);
      for (auto& x : n) x = rng.next(3);
      if (std::all_of(n.begin(), n.end(), [](std::int64_t x) { return x == 0; })) continue;
      directions.push_back(n);
    }
    Int den(1), span(0);
    for (const auto& m : marg)
      for (const auto& v : m) den = lcm(den, v.get_den());
    for (const auto& m : marg) {
      Rat s = (m.back() - m.front()) * Rat(den);
      if (s.get_num() > span) span = s.get_num();
    }
    std::int64_t base = span.get_si() + 1;
    IntVec n(d);
    std::int64_t b = 1;
    for (std::size_t j = 0; j < d; ++j) {
      n[j] = b;
      b *= base;
    }
    directions.push_back(n);
  }
  std::optional<std::vector<Tuple>> vectors;
  for (const auto& n : directions)
    if ((vectors = decode(nf, p, n, marg))) break;
  if (!vectors) throw SeparationError("separation failure at p = " + p.get_str());

  std::sort(vectors->begin(), vectors->end());
  std::vector<WeightVector> out;
  Interval lp = log_prime(p, cfg.bits);
  for (std::size_t i = 0; i < vectors->size();) {
    std::size_t k = i;
    while (k < vectors->size() && (*vectors)[k] == (*vectors)[i]) ++k;
    WeightVector w;
    w.place.kind = PlaceKind::PAdic;
    w.place.prime = p;
    w.place.index = out.size();
    w.delta = static_cast<unsigned>(k - i);
    w.zero = true;
    for (const auto& v : (*vectors)[i]) {
      w.exact.push_back(-v);
      w.entries.push_back(lp.scaled(-v));
      if (v != 0) w.zero = false;
    }
    out.push_back(std::move(w));
    i = k;
  }
  return out;
}

Prop proportional(const WeightVector& a, const WeightVector& b) {
  std::size_t d = a.entries.size();
  if (a.is_padic() && b.is_padic()) {
    Rat dot(0);
    for (std::size_t i = 0; i < d; ++i) {
      dot += a.exact[i] * b.exact[i];
      for (std::size_t j = i + 1; j < d; ++j)
        if (a.exact[i] * b.exact[j] != a.exact[j] * b.exact[i]) return Prop::No;
    }
    return dot > 0 ? Prop::Exact : Prop::No;
  }
  Interval dot(a.entries.front().precision());
  for (std::size_t i = 0; i < d; ++i) {
    dot += a.entries[i] * b.entries[i];
    for (std::size_t j = i + 1; j < d; ++j) {
      Interval minor = a.entries[i] * b.entries[j] - a.entries[j] * b.entries[i];
      if (!minor.contains_zero()) return Prop::No;
    }
  }
  if (dot.is_negative()) return Prop::No;
  if (dot.is_positive()) return Prop::Numeric;
  return Prop::Undecided;
}

namespace {

std::size_t find(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

}  // namespace

ClassPartition coarse_classes(const std::vector<WeightVector>& weights) {
  ClassPartition out;
  std::vector<std::size_t> live;
  for (std::size_t i = 0; i < weights.size(); ++i) (weights[i].zero ? out.zero_weights : live).push_back(i);
  std::vector<std::size_t> parent(weights.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::vector<bool> numeric(weights.size(), false), warned(weights.size(), false);
  for (std::size_t x = 0; x < live.size(); ++x)
    for (std::size_t y = x + 1; y < live.size(); ++y) {
      std::size_t a = live[x], b = live[y];
      Prop pr = proportional(weights[a], weights[b]);
      if (pr == Prop::No) continue;
      std::size_t ra = find(parent, a), rb = find(parent, b);
      std::size_t root = std::min(ra, rb), other = std::max(ra, rb);
      parent[other] = root;
      numeric[root] = numeric[root] || numeric[other] || pr != Prop::Exact;
      warned[root] = warned[root] || warned[other] || pr == Prop::Undecided;
    }
  std::map<std::size_t, std::size_t> index;
  for (std::size_t a : live) {
    std::size_t r = find(parent, a);
    auto it = index.find(r);
    if (it == index.end()) {
      it = index.emplace(r, out.classes.size()).first;
      out.classes.emplace_back();
    }
    CoarseClass& c = out.classes[it->second];
    c.members.push_back(a);
    c.dimension += weights[a].delta;
  }
  for (auto& [r, idx] : index) {
    out.classes[idx].certainty = numeric[r] ? Certainty::Numeric : Certainty::Exact;
    out.classes[idx].warning = warned[r];
  }
  return out;
}

std::optional<std::size_t> WeightAnalysis::class_of(std::size_t weight) const {
  for (std::size_t c = 0; c < partition.classes.size(); ++c) {
    const auto& m = partition.classes[c].members;
    if (std::find(m.begin(), m.end(), weight) != m.end()) return c;
  }
  return std::nullopt;
}

std::size_t WeightAnalysis::sign_member(std::size_t cls) const {
  for (std::size_t w : partition.classes[cls].members)
    if (weights[w].is_padic()) return w;
  return partition.classes[cls].representative();
}

WeightAnalysis analyze_weights(const std::vector<QMatrix>& generators, const WeightConfig& cfg) {
  WeightAnalysis wa;
  wa.d = generators.size();
  wa.config = cfg;
  wa.flag = invariant_flag(generators, cfg.seed);
  for (std::size_t b = 0; b < wa.flag.length(); ++b) {
    BlockData bd;
    bd.nf = diagonalize_block(wa.flag.blocks[b], cfg.seed);
    bd.roots = isolate_roots(bd.nf.f, cfg.bits + 32);
    bd.primes = block_primes(bd.nf);
    for (auto& w : archimedean_weights(bd.nf, bd.roots)) {
      w.block = b;
      wa.weights.push_back(std::move(w));
    }
    for (const auto& p : bd.primes)
      for (auto& w : padic_weights(bd.nf, p, cfg)) {
        w.block = b;
        wa.weights.push_back(std::move(w));
      }
    wa.blocks.push_back(std::move(bd));
  }
  wa.partition = coarse_classes(wa.weights);
  return wa;
}

WeightAnalysis analyze_weights(const SolenoidAction& action, const WeightConfig& cfg) {
  return analyze_weights(action.generators, cfg);
}

namespace {

bool boxes_meet(const Interval& a, const Interval& b) {
  return !(mpfr_less_p(a.hi(), b.lo()) || mpfr_less_p(b.hi(), a.lo()));
}

// The root of block data at the given precision, matched to the stored enclosure.
RootBox root_at(const BlockData& bd, const Place& place, mpfr_prec_t bits) {
  const RootBox& stored =
      place.kind == PlaceKind::Real ? bd.roots.real.at(place.index) : bd.roots.upper.at(place.index);
  if (bits + 32 + 64 <= bd.roots.precision) return stored;
  IsolatedRoots fresh = isolate_roots(bd.nf.f, bits + 32);
  const auto& list = place.kind == PlaceKind::Real ? fresh.real : fresh.upper;
  const RootBox* hit = nullptr;
  for (const auto& rb : list) {
    if (!boxes_meet(rb.box.re, stored.box.re)) continue;
    if (!stored.real && !boxes_meet(rb.box.im, stored.box.im)) continue;
    if (hit) throw CertificationError(place.label(), "ambiguous root match during precision escalation");
    hit = &rb;
  }
  if (!hit) throw CertificationError(place.label(), "root lost during precision escalation");
  return *hit;
}

}  // namespace

Interval weight_value(const WeightAnalysis& wa, std::size_t weight, const IntVec& n, mpfr_prec_t bits) {
  const WeightVector& w = wa.weights.at(weight);
  if (n.size() != w.entries.size()) throw DomainError("exponent vector has wrong length");
  if (w.is_padic()) {
    Rat c(0);
    for (std::size_t j = 0; j < n.size(); ++j) c += w.exact[j] * n[j];
    return log_prime(w.place.prime, bits).scaled(c);
  }
  const BlockData& bd = wa.blocks.at(w.block);
  if (std::all_of(n.begin(), n.end(), [](std::int64_t x) { return x == 0; })) return Interval(bits);
  RootBox rb = root_at(bd, w.place, bits);
  return log_abs(element(bd.nf, n), rb);
}

int weight_sign(const WeightAnalysis& wa, std::size_t weight, const IntVec& n) {
  const WeightVector& w = wa.weights.at(weight);
  if (std::all_of(n.begin(), n.end(), [](std::int64_t x) { return x == 0; })) return 0;
  if (w.is_padic()) {
    Rat c(0);
    for (std::size_t j = 0; j < n.size(); ++j) c += w.exact[j] * n[j];
    return sgn(c);
  }
  const BlockData& bd = wa.blocks.at(w.block);
  RatPoly a = element(bd.nf, n);
  Tri zero = Tri::Unknown;
  for (mpfr_prec_t bits = wa.config.bits; bits <= wa.config.max_bits; bits *= 2) {
    RootBox rb = root_at(bd, w.place, bits);
    try {
      int s = log_abs(a, rb).certified_sign();
      if (s != 0) return s;
    } catch (const CertificationError&) {
      // |zeta_n| not yet separated from zero; refine further.
    }
    if (zero != Tri::No) {
      zero = unit_modulus(bd.nf.f, a, rb);
      if (zero == Tri::Yes) return 0;
    }
  }
  throw CertificationError("block " + std::to_string(w.block) + " place " + w.place.label(),
                           "sign of chi.n undecided at maximum precision");
}

int class_sign(const WeightAnalysis& wa, std::size_t cls, const IntVec& n) {
  return weight_sign(wa, wa.sign_member(cls), n);
}

HorosphericalReport stable_horospherical(const WeightAnalysis& wa, const IntVec& n) {
  HorosphericalReport rep;
  std::map<std::string, unsigned> split;
  for (std::size_t c = 0; c < wa.partition.classes.size(); ++c) {
    int s = class_sign(wa, c, n);
    if (s > 0) {
      rep.unstable.push_back(c);
    } else if (s == 0) {
      rep.neutral.push_back(c);
    } else {
      rep.stable.push_back(c);
      rep.dimension += wa.partition.classes[c].dimension;
      for (std::size_t w : wa.partition.classes[c].members) {
        const auto& wv = wa.weights[w];
        split[wv.is_padic() ? wv.place.prime.get_str() : "inf"] += wv.delta;
      }
    }
  }
  // "inf" first, then primes numerically.
  std::vector<std::pair<std::string, unsigned>> ordered(split.begin(), split.end());
  std::sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
    if (a.first == "inf" || b.first == "inf") return a.first == "inf" && b.first != "inf";
    return Int(a.first) < Int(b.first);
  });
  rep.split = std::move(ordered);
  return rep;
}

namespace {

RatVec midpoint(const std::vector<Interval>& v) {
  RatVec out;
  for (const auto& x : v) out.push_back((x.lo_rat() + x.hi_rat()) / 2);
  return out;
}

Interval dot(const std::vector<Interval>& a, const std::vector<Interval>& b) {
  Interval acc(a.front().precision());
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

}  // namespace

std::vector<ExposedResult> exposed_classes(const WeightAnalysis& wa, const std::vector<std::size_t>& group) {
  std::vector<ExposedResult> out;
  bool all_exact = std::all_of(group.begin(), group.end(),
                               [&](std::size_t c) { return wa.weights[wa.sign_member(c)].is_padic(); });
  std::size_t d = wa.d;
  for (std::size_t c : group) {
    ExposedResult r;
    r.cls = c;
    std::vector<std::size_t> others;
    for (std::size_t o : group)
      if (o != c) others.push_back(o);
    if (others.empty()) {
      r.verdict = Exposure::Exposed;
      r.certainty = Certainty::Exact;
      r.witness = RatVec(d);
      out.push_back(std::move(r));
      continue;
    }
    if (all_exact) {
      QMatrix strict(others.size(), d), equal(1, d);
      for (std::size_t i = 0; i < others.size(); ++i)
        for (std::size_t j = 0; j < d; ++j) strict(i, j) = wa.weights[wa.sign_member(others[i])].exact[j];
      for (std::size_t j = 0; j < d; ++j) equal(0, j) = wa.weights[wa.sign_member(c)].exact[j];
      auto sol = find_strict_direction(strict, equal);
      r.certainty = Certainty::Exact;
      r.verdict = sol ? Exposure::Exposed : Exposure::NotExposed;
      r.witness = sol;
      out.push_back(std::move(r));
      continue;
    }
    r.certainty = Certainty::Numeric;
    const auto& chi = wa.weights[wa.sign_member(c)].entries;
    QMatrix strict(others.size(), d), equal(1, d);
    for (std::size_t i = 0; i < others.size(); ++i) {
      RatVec m = midpoint(wa.weights[wa.sign_member(others[i])].entries);
      for (std::size_t j = 0; j < d; ++j) strict(i, j) = m[j];
    }
    RatVec mc = midpoint(chi);
    for (std::size_t j = 0; j < d; ++j) equal(0, j) = mc[j];
    auto sol = find_strict_direction(strict, equal);
    if (!sol) {
      r.verdict = Exposure::NotExposed;
      out.push_back(std::move(r));
      continue;
    }
    // Project n' onto ker chi with interval chi and check the strict inequalities.
    mpfr_prec_t p = chi.front().precision();
    std::vector<Interval> nv;
    for (const auto& x : *sol) nv.push_back(Interval(x, p));
    Interval cn = dot(chi, nv), cc = dot(chi, chi);
    bool ok = true;
    try {
      for (std::size_t o : others) {
        const auto& y = wa.weights[wa.sign_member(o)].entries;
        Interval val = dot(y, nv) - cn * dot(y, chi) / cc;
        if (!val.is_negative()) ok = false;
      }
    } catch (const CertificationError&) {
      ok = false;
    }
    r.verdict = ok ? Exposure::Exposed : Exposure::Inconclusive;
    r.witness = sol;
    out.push_back(std::move(r));
  }
  return out;
}

Interval check_product_formula(const NumberFieldAction& nf, const IntVec& n, const WeightConfig& cfg) {
  mpfr_prec_t bits = cfg.bits;
  RatPoly a = element(nf, n);
  IsolatedRoots roots = isolate_roots(nf.f, bits + 32);
  Interval sum(bits);
  for (const auto& rb : roots.real) sum += log_abs(a, rb);
  for (const auto& rb : roots.upper) sum += log_abs(a, rb).scaled(Rat(2));
  for (const auto& p : block_primes(nf))
    for (const auto& w : padic_weights(nf, p, cfg)) {
      Rat c(0);
      for (std::size_t j = 0; j < n.size(); ++j) c += w.exact[j] * n[j];
      sum += log_prime(p, bits).scaled(c * w.delta);
    }
  return sum;
}

}  // namespace algdyn
