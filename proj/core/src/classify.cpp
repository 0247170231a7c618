#include "algdyn/classify.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "algdyn/errors.hpp"
#include "algdyn/factor.hpp"
#include "algdyn/jordan.hpp"

namespace algdyn {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Yes: return "yes";
    case Verdict::No: return "no";
    default: return "unknown";
  }
}

Rat simplest_between(const Rat& lo, const Rat& hi) {
  if (lo > hi) return simplest_between(hi, lo);
  if (lo <= 0 && hi >= 0) return Rat(0);
  if (hi < 0) return -simplest_between(-hi, -lo);
  Int a = lo.get_num() / lo.get_den();  // floor, lo > 0
  if (Rat(a) == lo) return Rat(a);
  if (Rat(a + 1) <= hi) return Rat(a + 1);
  Rat frac = simplest_between(1 / (hi - a), 1 / (lo - a));
  return Rat(a) + 1 / frac;
}

namespace {

IntVec primitive_ints(const RatVec& v) {
  Int l = 1;
  for (const auto& x : v) l = lcm(l, x.get_den());
  Int g = 0;
  std::vector<Int> z;
  for (const auto& x : v) {
    Int t = x.get_num() * (l / x.get_den());
    g = gcd(g, t);
    z.push_back(t);
  }
  IntVec out;
  for (auto& t : z) {
    if (g != 0) t /= g;
    if (!t.fits_slong_p()) throw DomainError("relation vector entry exceeds 64 bits");
    out.push_back(t.get_si());
  }
  return out;
}

RatVec to_rats(const IntVec& v) { return RatVec(v.begin(), v.end()); }

unsigned long factorial_capped(unsigned long k, unsigned long cap) {
  unsigned long f = 1;
  for (unsigned long i = 2; i <= k; ++i) {
    f *= i;
    if (f >= cap) return cap;
  }
  return std::min(f, cap);
}

// zeta'_j / zeta_j inside one compositum component, with their torsion orders.
std::optional<std::vector<unsigned long>> ratio_orders(const CompositumComponent& comp, const NumberFieldAction& nf1,
                                                       const NumberFieldAction& nf2) {
  std::vector<unsigned long> orders;
  for (std::size_t j = 0; j < nf1.rank(); ++j) {
    RatPoly z1 = substitute(nf1.multipliers[j], comp.theta1, comp.field);
    RatPoly z2 = substitute(nf2.multipliers[j], comp.theta2, comp.field);
    RatPoly q = (z2 * inverse_mod(z1, comp.field)) % comp.field;
    auto o = is_root_of_unity({comp.field, q});
    if (!o) return std::nullopt;
    orders.push_back(*o);
  }
  return orders;
}

std::vector<QMatrix> powers(const std::vector<QMatrix>& gens, const std::vector<unsigned long>& orders) {
  std::vector<QMatrix> out;
  for (std::size_t j = 0; j < gens.size(); ++j) out.push_back(gens[j].pow(static_cast<long>(orders[j])));
  return out;
}

}  // namespace

TotalIrreducibility total_irreducibility(const SolenoidAction& action, const ClassifyConfig& cfg) {
  TotalIrreducibility r;
  r.irreducible = is_irreducible(action, cfg.seed);
  r.degree_bound = factorial_capped(action.m, cfg.degree_cap);
  for (unsigned long n = 1; n <= cfg.index_bound; ++n)
    if (euler_phi(n) <= r.degree_bound) r.M = lcm(r.M, Int(n));
  // phi(n) >= sqrt(n/2), so only n <= 2 D^2 can qualify.
  unsigned long limit = std::min<unsigned long>(2 * r.degree_bound * r.degree_bound + 2, 1000000);
  for (unsigned long n = cfg.index_bound + 1; n <= limit && !r.truncated; ++n)
    if (euler_phi(n) <= r.degree_bound) r.truncated = true;
  if (!r.irreducible) return r;

  NumberFieldAction nf = diagonalize_block(action.generators, cfg.seed);
  for (const auto& comp : compositum(nf.f, nf.f, cfg.seed)) {
    if (comp.theta1 == comp.theta2) continue;
    auto orders = ratio_orders(comp, nf, nf);
    if (!orders) continue;
    IrreducibilityResult ir = irreducibility(powers(action.generators, *orders), cfg.seed);
    if (ir.irreducible) continue;
    r.sublattice = IntVec(orders->begin(), orders->end());
    r.witness = ir.witness;
    return r;
  }
  r.totally_irreducible = true;
  return r;
}

namespace {

QMatrix log_unipotent(const QMatrix& u) {
  std::size_t m = u.rows();
  QMatrix n = u - QMatrix::identity(m);
  QMatrix term = n, acc(m, m);
  for (std::size_t k = 1; k <= m && !term.is_zero(); ++k) {
    acc += term * Rat(k % 2 == 1 ? 1 : -1, static_cast<long>(k));
    term = term * n;
  }
  return acc;
}

struct BlockRelations {
  std::vector<IntVec> basis;
  std::optional<IntVec> offending;
};

// Torsion relations of one number-field block: the exact p-adic kernel,
// cut down by the archimedean log rows, each candidate certified.
BlockRelations block_relations(const WeightAnalysis& wa, std::size_t b) {
  const NumberFieldAction& nf = wa.blocks[b].nf;
  std::size_t d = wa.d;
  std::vector<RatVec> padic_rows;
  std::vector<const WeightVector*> arch;
  for (const auto& w : wa.weights) {
    if (w.block != b || w.zero) continue;
    if (w.is_padic())
      padic_rows.push_back(w.exact);
    else
      arch.push_back(&w);
  }
  std::vector<RatVec> kp;
  if (padic_rows.empty()) {
    for (std::size_t j = 0; j < d; ++j) {
      RatVec e(d, Rat(0));
      e[j] = 1;
      kp.push_back(e);
    }
  } else {
    kp = kernel(QMatrix::from_rows(padic_rows));
  }
  BlockRelations out;
  std::size_t s = kp.size();
  if (s == 0) return out;

  mpfr_prec_t bits = wa.config.bits;
  std::vector<std::vector<Interval>> m;
  for (const auto* w : arch) {
    std::vector<Interval> row;
    for (std::size_t c = 0; c < s; ++c) {
      Interval acc(bits);
      for (std::size_t j = 0; j < d; ++j)
        if (kp[c][j] != 0) acc += w->entries[j].scaled(kp[c][j]);
      row.push_back(std::move(acc));
    }
    m.push_back(std::move(row));
  }

  // Gauss-Jordan on certified pivots only.
  std::vector<std::size_t> pivot_cols;
  std::vector<bool> is_pivot(s, false);
  for (std::size_t step = 0; step < m.size(); ++step) {
    std::size_t bi = m.size(), bc = s;
    double best = -1;
    for (std::size_t i = step; i < m.size(); ++i)
      for (std::size_t c = 0; c < s; ++c) {
        if (is_pivot[c] || m[i][c].certified_sign() == 0) continue;
        double a = std::abs(m[i][c].mid_double());
        if (a > best) {
          best = a;
          bi = i;
          bc = c;
        }
      }
    if (bi == m.size()) break;
    std::swap(m[step], m[bi]);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == step) continue;
      Interval f = m[i][bc] / m[step][bc];
      for (std::size_t c = 0; c < s; ++c) m[i][c] -= f * m[step][c];
      m[i][bc] = Interval(bits);
    }
    is_pivot[bc] = true;
    pivot_cols.push_back(bc);
  }

  for (std::size_t f = 0; f < s; ++f) {
    if (is_pivot[f]) continue;
    RatVec coeff(s, Rat(0));
    coeff[f] = 1;
    for (std::size_t k = 0; k < pivot_cols.size(); ++k) {
      Interval x = -(m[k][f] / m[k][pivot_cols[k]]);
      coeff[pivot_cols[k]] = simplest_between(x.lo_rat(), x.hi_rat());
    }
    RatVec a(d, Rat(0));
    for (std::size_t c = 0; c < s; ++c)
      for (std::size_t j = 0; j < d; ++j) a[j] += coeff[c] * kp[c][j];
    IntVec ai = primitive_ints(a);
    if (!is_root_of_unity({nf.f, element(nf, ai)})) {
      out.offending = ai;
      return out;
    }
    out.basis.push_back(ai);
  }
  return out;
}

}  // namespace

VirtualCyclicity virtually_cyclic(const std::vector<QMatrix>& generators, const ClassifyConfig& cfg) {
  VirtualCyclicity r;
  std::size_t d = generators.size();
  if (d == 0) throw DomainError("virtually_cyclic: no generators");
  WeightConfig wc;
  wc.bits = cfg.bits;
  wc.seed = cfg.seed;
  WeightAnalysis wa = analyze_weights(generators, wc);

  QSubspace rel = QSubspace::whole(d);
  for (std::size_t b = 0; b < wa.blocks.size(); ++b) {
    BlockRelations br = block_relations(wa, b);
    if (br.offending) {
      r.offending = br.offending;
      return r;
    }
    std::vector<RatVec> vs;
    for (const auto& a : br.basis) vs.push_back(to_rats(a));
    rel = rel.intersect(QSubspace::span(vs, d));
  }
  // A^a also has to have trivial unipotent part: sum_j a_j log U_j = 0.
  std::size_t m = generators.front().rows();
  std::vector<RatVec> logs;
  for (const auto& g : generators) logs.push_back(flatten(log_unipotent(jordan_chevalley(g).unipotent)));
  rel = rel.intersect(QSubspace::span(kernel(QMatrix::from_columns(logs, m * m)), d));

  for (const auto& v : rel.basis()) {
    IntVec a = primitive_ints(v);
    unsigned long order = 1;
    for (const auto& bd : wa.blocks) {
      auto o = is_root_of_unity({bd.nf.f, element(bd.nf, a)});
      if (!o) throw CertificationError("relation lattice", "basis vector failed torsion re-check");
      order = std::lcm(order, *o);
    }
    r.relations.basis.push_back(a);
    r.relations.orders.push_back(order);
  }
  r.relations.rank = d - rel.dim();
  r.verdict = rel.dim() + 1 >= d ? Verdict::Yes : Verdict::No;
  return r;
}

VirtualCyclicity virtually_cyclic(const SolenoidAction& action, const ClassifyConfig& cfg) {
  return virtually_cyclic(action.generators, cfg);
}

FactorCheck has_virtually_cyclic_factor(const SolenoidAction& action, const ClassifyConfig& cfg) {
  FactorCheck r;
  bool unknown = false;
  for (const auto& comp : socle_irreducibles(action, cfg.seed)) {
    VirtualCyclicity vc = virtually_cyclic(comp.block, cfg);
    if (vc.verdict == Verdict::Yes) {
      r.verdict = Verdict::Yes;
      r.witness = comp.representative;
      return r;
    }
    if (vc.verdict == Verdict::Unknown) unknown = true;
  }
  r.verdict = unknown ? Verdict::Unknown : Verdict::No;
  return r;
}

namespace {

// Basis of {T : T B1_j = B2_j T}, each as a k2 x k1 matrix.
std::vector<QMatrix> intertwiners(const std::vector<QMatrix>& b1, const std::vector<QMatrix>& b2) {
  std::size_t k1 = b1.front().rows(), k2 = b2.front().rows();
  std::vector<RatVec> rows;
  for (std::size_t j = 0; j < b1.size(); ++j)
    for (std::size_t r = 0; r < k2; ++r)
      for (std::size_t c = 0; c < k1; ++c) {
        // (B2 T - T B1)_{rc}, with T_{ab} at index a*k1 + b.
        RatVec row(k1 * k2, Rat(0));
        for (std::size_t a = 0; a < k2; ++a) row[a * k1 + c] += b2[j](r, a);
        for (std::size_t b = 0; b < k1; ++b) row[r * k1 + b] -= b1[j](b, c);
        rows.push_back(std::move(row));
      }
  std::vector<QMatrix> out;
  for (const auto& v : kernel(QMatrix::from_rows(rows))) out.push_back(unflatten(v, k2, k1));
  return out;
}

std::optional<QSubspace> graph_joining(const SocleComponent& c1, const SocleComponent& c2,
                                       const std::vector<QMatrix>& b1, const std::vector<QMatrix>& b2,
                                       std::size_t m1, std::size_t m2, std::uint64_t seed) {
  std::vector<QMatrix> ts = intertwiners(b1, b2);
  if (ts.empty()) return std::nullopt;
  SeededInts rng(seed);
  QMatrix e1 = c1.representative.basis_matrix(), e2 = c2.representative.basis_matrix();
  std::size_t k1 = e1.cols();
  for (std::size_t attempt = 0; attempt < ts.size() + 16; ++attempt) {
    QMatrix t = ts[attempt % ts.size()];
    if (attempt >= ts.size())
      for (const auto& s : ts) t += s * Rat(rng.next(4));
    if (t.is_zero()) continue;
    QSubspace ker = QSubspace::kernel_of(t);
    QSubspace u = ker.is_zero() ? QSubspace::whole(k1) : minimal_invariant(b1, seed + attempt);
    if (!u.intersect(ker).is_zero()) continue;
    std::vector<RatVec> gens;
    for (const auto& v : u.basis()) {
      RatVec x = e1.apply(v), y = e2.apply(t.apply(v));
      RatVec g(m1 + m2);
      for (std::size_t i = 0; i < m1; ++i) g[i] = x[i];
      for (std::size_t i = 0; i < m2; ++i) g[m1 + i] = -y[i];
      gens.push_back(std::move(g));
    }
    return QSubspace::span(gens, m1 + m2);
  }
  return std::nullopt;
}

}  // namespace

bool verify_joining(const ComparisonReport& r, std::size_t m1, std::size_t m2) {
  if (!r.joining || r.joining->is_zero()) return false;
  for (const auto& p : r.restricted_product)
    if (!r.joining->is_invariant(p)) return false;
  std::vector<RatVec> l1, l2;
  for (std::size_t i = 0; i < m1 + m2; ++i) {
    RatVec e(m1 + m2, Rat(0));
    e[i] = 1;
    (i < m1 ? l1 : l2).push_back(std::move(e));
  }
  return r.joining->intersect(QSubspace::span(l1, m1 + m2)).is_zero() &&
         r.joining->intersect(QSubspace::span(l2, m1 + m2)).is_zero();
}

ComparisonReport compare(const SolenoidAction& a1, const SolenoidAction& a2, const ClassifyConfig& cfg) {
  if (a1.d != a2.d) throw DomainError("actions have different ranks");
  ComparisonReport r;
  FactorCheck f1 = has_virtually_cyclic_factor(a1, cfg), f2 = has_virtually_cyclic_factor(a2, cfg);
  r.hypothesis_holds = f1.verdict == Verdict::No && f2.verdict == Verdict::No;
  if (!r.hypothesis_holds) r.notes.push_back("virtually cyclic factor present or undecided; disjointness is not certified");

  auto s1 = socle_irreducibles(a1, cfg.seed), s2 = socle_irreducibles(a2, cfg.seed);
  std::vector<NumberFieldAction> n1, n2;
  for (const auto& c : s1) n1.push_back(diagonalize_block(c.block, cfg.seed));
  for (const auto& c : s2) n2.push_back(diagonalize_block(c.block, cfg.seed));

  std::optional<EmbeddingWitness> best;
  Int best_index;
  bool beyond = false;
  for (std::size_t i = 0; i < s1.size(); ++i)
    for (std::size_t j = 0; j < s2.size(); ++j)
      for (const auto& comp : compositum(n1[i].f, n2[j].f, cfg.seed)) {
        auto orders = ratio_orders(comp, n1[i], n2[j]);
        if (!orders) continue;
        Int index = 1;
        for (auto o : *orders) index *= o;
        if (index > cfg.index_bound) {
          beyond = true;
          continue;
        }
        if (best && index >= best_index) continue;
        best = EmbeddingWitness{i, j, comp.field, comp.theta1, comp.theta2, *orders};
        best_index = index;
      }
  if (beyond) r.notes.push_back("a match exists beyond the index bound " + std::to_string(cfg.index_bound));

  if (!best) {
    r.disjoint = r.hypothesis_holds && !beyond ? Verdict::Yes : Verdict::Unknown;
    return r;
  }
  const auto& c1 = s1[best->block1];
  const auto& c2 = s2[best->block2];
  std::size_t k1 = c1.representative.dim(), k2 = c2.representative.dim();
  if (k1 != k2)
    r.notes.push_back("socle blocks have dimensions " + std::to_string(k1) + " and " + std::to_string(k2) +
                      ", so no common irreducible factor exists at full index");
  r.disjoint = Verdict::No;
  r.lattice = IntVec(best->orders.begin(), best->orders.end());
  r.weakly_isomorphic = c1.representative.is_whole() && c2.representative.is_whole() && k1 == k2;

  std::vector<QMatrix> p1 = powers(a1.generators, best->orders), p2 = powers(a2.generators, best->orders);
  for (std::size_t j = 0; j < a1.d; ++j) r.restricted_product.push_back(block_diag(p1[j], p2[j]));
  r.joining = graph_joining(c1, c2, restrict_all(p1, c1.representative), restrict_all(p2, c2.representative), a1.m,
                            a2.m, cfg.seed);
  r.embedding = std::move(best);
  if (!verify_joining(r, a1.m, a2.m)) {
    r.joining.reset();
    r.notes.push_back("no graph joining could be verified for the matched blocks");
  }
  return r;
}

namespace {

// Generator of the roots of unity in Q[x]/(p), as a polynomial in x.
std::pair<RatPoly, unsigned long> unity_generator(const RatPoly& p, std::uint64_t seed) {
  unsigned long k = static_cast<unsigned long>(p.degree());
  if (k == 1) return {RatPoly::constant(Rat(-1)), 2};
  for (unsigned long n = 2 * k * k + 2; n >= 3; --n) {
    if (k % euler_phi(n) != 0) continue;
    for (const auto& fac : factor_over_field(cyclotomic(static_cast<unsigned>(n)), p, seed))
      if (fac.coeffs.size() == 2) return {(-fac.coeffs[0]) % p, n};
  }
  return {RatPoly::constant(Rat(-1)), 2};
}

unsigned long matrix_order(const QMatrix& g, unsigned long cap) {
  QMatrix acc = g;
  for (unsigned long k = 1; k <= cap; ++k) {
    if (acc.is_identity()) return k;
    acc = acc * g;
  }
  return 0;
}

}  // namespace

TorsionGroup commutant_torsion(const SolenoidAction& action, const ClassifyConfig& cfg) {
  TorsionGroup out;
  out.note = "affine parts -Id + w with w a fixed point are not enumerated";
  std::size_t m = action.m;
  std::vector<QMatrix> c = commutant(action.generators);
  std::vector<QMatrix> gens{QMatrix::scalar(m, Rat(-1))};

  bool commutative = true;
  for (std::size_t i = 0; i < c.size() && commutative; ++i)
    for (std::size_t j = i + 1; j < c.size() && commutative; ++j) commutative = commute(c[i], c[j]);

  std::optional<QMatrix> g;
  if (commutative) {
    SeededInts rng(cfg.seed);
    for (std::size_t attempt = 0; attempt < c.size() + 64 && !g; ++attempt) {
      QMatrix cand = attempt < c.size() ? c[attempt] : QMatrix(m, m);
      if (attempt >= c.size())
        for (const auto& b : c) cand += b * Rat(rng.next(8));
      if (static_cast<std::size_t>(minpoly(cand).degree()) == c.size()) g = cand;
    }
  }
  if (g) {
    RatPoly mu = minpoly(*g);
    auto factors = factor_poly(mu, cfg.seed);
    for (const auto& [p, e] : factors) {
      RatPoly pm = p.monic();
      auto [root, order] = unity_generator(pm, cfg.seed);
      if (order <= 2 && factors.size() == 1) continue;
      RatPoly pe = pm.pow(static_cast<unsigned>(e));
      RatPoly rest = mu / pe;
      // Idempotent of Q[x]/(mu) for the factor pe.
      RatPoly idem = rest.degree() == 0 ? RatPoly::constant(Rat(1))
                                        : (inverse_mod(rest % pe, pe) * rest) % mu;
      RatPoly lift = (RatPoly::constant(Rat(1)) + (root - RatPoly::constant(Rat(1))) * idem) % mu;
      gens.push_back(jordan_chevalley(evaluate(lift, *g)).semisimple);
    }
    out.complete = true;
  } else {
    out.note += "; commutant is not a commutative algebra generated by one element, so only -Id is used as a generator";
  }

  const std::size_t cap = 4096;
  std::vector<QMatrix> elems{QMatrix::identity(m)};
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    QMatrix x = elems[queue.front()];
    queue.pop_front();
    for (const auto& h : gens) {
      QMatrix y = x * h;
      if (std::find(elems.begin(), elems.end(), y) != elems.end()) continue;
      if (elems.size() >= cap) {
        out.complete = false;
        break;
      }
      elems.push_back(y);
      queue.push_back(elems.size() - 1);
    }
  }
  for (const auto& x : elems) out.orders.push_back(matrix_order(x, cap));
  std::vector<std::size_t> idx(elems.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::stable_sort(idx.begin() + 1, idx.end(), [&](std::size_t a, std::size_t b) { return out.orders[a] < out.orders[b]; });
  std::vector<QMatrix> sorted;
  std::vector<unsigned long> orders;
  for (auto i : idx) {
    sorted.push_back(elems[i]);
    orders.push_back(out.orders[i]);
  }
  out.elements = std::move(sorted);
  out.orders = std::move(orders);
  return out;
}

}  // namespace algdyn
