#include "algdyn/entropy.hpp"

#include <algorithm>
#include <functional>

#include "algdyn/errors.hpp"

namespace algdyn {

bool LogCombination::has_arch() const { return !(mpfr_zero_p(arch.lo()) && mpfr_zero_p(arch.hi())); }

bool LogCombination::is_exact_zero() const { return padic.empty() && !has_arch(); }

Interval LogCombination::value(mpfr_prec_t bits) const {
  Interval v = arch;
  for (const auto& [p, q] : padic) v += log_prime(p, bits).scaled(q);
  return v;
}

LogCombination LogCombination::scaled(const Rat& q) const {
  LogCombination out(arch.precision());
  if (q == 0) return out;
  out.arch = arch.scaled(q);
  for (const auto& [p, c] : padic) out.padic[p] = c * q;
  return out;
}

LogCombination& LogCombination::operator+=(const LogCombination& o) {
  if (o.has_arch()) arch += o.arch;
  for (const auto& [p, q] : o.padic) {
    Rat& c = padic[p];
    c += q;
    if (c == 0) padic.erase(p);
  }
  return *this;
}

std::string LogCombination::str(int digits) const {
  std::string s;
  for (const auto& [p, q] : padic) {
    if (!s.empty()) s += " + ";
    s += to_string(q) + "*log(" + p.get_str() + ")";
  }
  if (has_arch()) {
    if (!s.empty()) s += " + ";
    s += arch.str(digits);
  }
  return s.empty() ? "0" : s;
}

Ratio ratio(const LogCombination& a, const LogCombination& b, mpfr_prec_t bits) {
  Ratio r{a.value(bits) / b.value(bits), std::nullopt};
  if (a.has_arch() || b.has_arch() || b.padic.empty()) return r;
  if (a.padic.empty()) {
    r.exact = Rat(0);
    return r;
  }
  if (a.padic.size() != b.padic.size()) return r;
  std::optional<Rat> q;
  for (const auto& [p, c] : b.padic) {
    auto it = a.padic.find(p);
    if (it == a.padic.end()) return r;
    Rat t = it->second / c;
    if (q && *q != t) return r;
    q = t;
  }
  r.exact = q;
  r.value = Interval(*q, bits);
  return r;
}

namespace {

// delta * (-chi_w . n) for a weight known to be stable.
LogCombination stable_part(const WeightAnalysis& wa, std::size_t w, const IntVec& n, mpfr_prec_t bits) {
  const WeightVector& wv = wa.weights[w];
  LogCombination out(bits);
  if (wv.is_padic()) {
    Rat c(0);
    for (std::size_t j = 0; j < n.size(); ++j) c -= wv.exact[j] * n[j];
    c *= wv.delta;
    if (c != 0) out.padic[wv.place.prime] = c;
  } else {
    out.arch = (-weight_value(wa, w, n, bits)).scaled(Rat(wv.delta));
  }
  return out;
}

std::vector<int> class_signs(const WeightAnalysis& wa, const IntVec& n) {
  if (n.size() != wa.d) throw DomainError("exponent vector has length " + std::to_string(n.size()) +
                                          ", expected " + std::to_string(wa.d));
  std::vector<int> s;
  for (std::size_t c = 0; c < wa.partition.classes.size(); ++c) s.push_back(class_sign(wa, c, n));
  return s;
}

LogCombination stable_sum(const WeightAnalysis& wa, const IntVec& n, const std::vector<int>& signs,
                          const std::function<bool(std::size_t, std::size_t)>& keep, mpfr_prec_t bits) {
  LogCombination out(bits);
  for (std::size_t c = 0; c < signs.size(); ++c) {
    if (signs[c] >= 0) continue;
    for (std::size_t w : wa.partition.classes[c].members)
      if (keep(c, w)) out += stable_part(wa, w, n, bits);
  }
  return out;
}

}  // namespace

EntropyReport haar_entropy(const WeightAnalysis& wa, const IntVec& n) {
  mpfr_prec_t bits = wa.config.bits;
  std::vector<int> signs = class_signs(wa, n);
  EntropyReport r;
  r.n = n;
  r.per_block.assign(wa.flag.length(), LogCombination(bits));
  r.total = LogCombination(bits);
  for (std::size_t c = 0; c < signs.size(); ++c) {
    if (signs[c] >= 0) continue;
    ClassEntropy ce{c, LogCombination(bits)};
    for (std::size_t w : wa.partition.classes[c].members) {
      LogCombination part = stable_part(wa, w, n, bits);
      r.per_block[wa.weights[w].block] += part;
      ce.value += part;
    }
    r.total += ce.value;
    r.per_class.push_back(std::move(ce));
  }
  return r;
}

EntropyReport haar_entropy(const SolenoidAction& action, const IntVec& n, const WeightConfig& cfg) {
  return haar_entropy(analyze_weights(action, cfg), n);
}

LogCombination entropy_contribution(const WeightAnalysis& wa, const IntVec& n,
                                    const std::vector<std::size_t>& classes) {
  std::vector<int> signs = class_signs(wa, n);
  return stable_sum(
      wa, n, signs,
      [&](std::size_t c, std::size_t) { return std::find(classes.begin(), classes.end(), c) != classes.end(); },
      wa.config.bits);
}

LogCombination flag_range_entropy(const WeightAnalysis& wa, const IntVec& n, std::size_t first, std::size_t last) {
  std::vector<int> signs = class_signs(wa, n);
  return stable_sum(
      wa, n, signs,
      [&](std::size_t, std::size_t w) { return wa.weights[w].block >= first && wa.weights[w].block < last; },
      wa.config.bits);
}

KappaResult kappa(const WeightAnalysis& wa, const IntVec& n, const std::vector<std::size_t>& classes,
                  std::size_t block) {
  if (block >= wa.flag.length()) throw DomainError("block index out of range");
  std::vector<int> signs = class_signs(wa, n);
  auto in_v = [&](std::size_t c) { return std::find(classes.begin(), classes.end(), c) != classes.end(); };
  std::size_t included = 0, missing = 0;
  for (std::size_t c = 0; c < signs.size(); ++c) {
    if (signs[c] >= 0) continue;
    for (std::size_t w : wa.partition.classes[c].members)
      if (wa.weights[w].block == block) ++(in_v(c) ? included : missing);
  }
  if (included + missing == 0) throw DomainError("no positive entropy in designated block for this n");

  KappaResult r;
  r.proper = missing > 0;
  if (missing == 0) r.exact = Rat(1);
  if (included == 0) r.exact = Rat(0);
  for (mpfr_prec_t bits = wa.config.bits; bits <= wa.config.max_bits; bits *= 2) {
    auto in_block = [&](std::size_t, std::size_t w) { return wa.weights[w].block == block; };
    LogCombination num = stable_sum(
        wa, n, signs, [&](std::size_t c, std::size_t w) { return in_block(c, w) && in_v(c); }, bits);
    LogCombination rest = stable_sum(
        wa, n, signs, [&](std::size_t c, std::size_t w) { return in_block(c, w) && !in_v(c); }, bits);
    LogCombination den = num + rest;
    if (!den.value(bits).is_positive()) continue;
    Ratio q = ratio(num, den, bits);
    r.value = r.exact ? Interval(*r.exact, bits) : q.value;
    if (!r.exact && q.exact) r.exact = q.exact;
    r.below_one = r.proper && rest.value(bits).is_positive();
    if (!r.proper || r.below_one) return r;
  }
  if (r.proper) throw CertificationError("block " + std::to_string(block), "kappa < 1 not certified at maximum precision");
  throw CertificationError("block " + std::to_string(block), "entropy of the block not separated from zero");
}

std::vector<IntVec> sample_grid(std::size_t d, int bound) {
  std::vector<IntVec> out;
  IntVec n(d, -bound);
  while (true) {
    if (std::any_of(n.begin(), n.end(), [](std::int64_t x) { return x != 0; })) out.push_back(n);
    std::size_t i = 0;
    while (i < d && n[i] == bound) n[i++] = -bound;
    if (i == d) break;
    ++n[i];
  }
  return out;
}

LinearForm entropy_linear_form(const WeightAnalysis& wa, std::size_t cls, int bound) {
  const CoarseClass& cc = wa.partition.classes.at(cls);
  mpfr_prec_t bits = wa.config.bits;
  const WeightVector& rep = wa.weights[cc.representative()];
  std::size_t j = 0;
  double best = -1;
  for (std::size_t i = 0; i < rep.entries.size(); ++i) {
    double a = std::abs(rep.entries[i].mid_double());
    if (rep.entries[i].certified_sign() != 0 && a > best) {
      best = a;
      j = i;
    }
  }
  LinearForm lf;
  lf.cls = cls;
  lf.c = Interval(bits);
  for (std::size_t w : cc.members) {
    const WeightVector& wv = wa.weights[w];
    if (wv.is_padic() && rep.is_padic() && wv.place.prime == rep.place.prime)
      lf.c += Interval(wv.exact[j] / rep.exact[j] * wv.delta, bits);
    else
      lf.c += (wv.entries[j] / rep.entries[j]).scaled(Rat(wv.delta));
  }
  for (const IntVec& n : sample_grid(wa.d, bound)) {
    Interval h = entropy_contribution(wa, n, {cls}).value(bits);
    Interval predicted(bits);
    if (class_sign(wa, cls, n) < 0) predicted = lf.c * -weight_value(wa, cc.representative(), n, bits);
    Interval res = h - predicted;
    if (!res.contains_zero()) lf.consistent = false;
    lf.residuals.emplace_back(n, std::move(res));
  }
  return lf;
}

std::vector<QMatrix> induced_action(const std::vector<QMatrix>& generators, const HomogeneousMeasure& g) {
  for (std::size_t j = 0; j < generators.size(); ++j)
    if (!g.annihilator.is_invariant(generators[j]))
      throw DomainError("subgroup is not invariant under generator " + std::to_string(j + 1));
  if (g.annihilator.is_whole()) throw DomainError("subgroup is trivial");
  if (g.annihilator.is_zero()) return generators;
  return quotient_all(generators, g.annihilator);
}

EntropyReport homogeneous_entropy(const SolenoidAction& action, const HomogeneousMeasure& g, const IntVec& n,
                                  const WeightConfig& cfg) {
  return haar_entropy(analyze_weights(induced_action(action.generators, g), cfg), n);
}

ShapeReport shape_identity_report(const SolenoidAction& action, const HomogeneousMeasure& g,
                                  const SolenoidAction& reference, int bound, const WeightConfig& cfg) {
  if (action.d != reference.d) throw DomainError("reference action has a different rank");
  WeightAnalysis wg = analyze_weights(induced_action(action.generators, g), cfg);
  WeightAnalysis wr = analyze_weights(reference, cfg);
  ShapeReport rep;

  std::vector<std::vector<std::size_t>> match(wr.partition.classes.size());
  std::vector<bool> used(wg.partition.classes.size(), false);
  for (std::size_t r = 0; r < match.size(); ++r) {
    const WeightVector& a = wr.weights[wr.partition.classes[r].representative()];
    for (std::size_t c = 0; c < wg.partition.classes.size(); ++c) {
      const WeightVector& b = wg.weights[wg.partition.classes[c].representative()];
      if (proportional(a, b) != Prop::No) {
        match[r].push_back(c);
        used[c] = true;
      }
    }
    if (match[r].empty()) rep.notes.push_back("reference class " + std::to_string(r) + " absent from the measure");
  }
  for (std::size_t c = 0; c < used.size(); ++c)
    if (!used[c]) rep.notes.push_back("measure class " + std::to_string(c) + " has no reference counterpart");

  for (const IntVec& n : sample_grid(action.d, bound)) {
    for (std::size_t r = 0; r < match.size(); ++r) {
      LogCombination ref = entropy_contribution(wr, n, {r});
      if (ref.is_exact_zero()) continue;
      LogCombination meas = entropy_contribution(wg, n, match[r]);
      Ratio q = ratio(meas, ref, cfg.bits);
      rep.rows.push_back({n, r, std::move(meas), std::move(ref), std::move(q)});
    }
  }
  if (rep.rows.empty()) throw DomainError("designated block has zero entropy for all sampled n");

  rep.kappa = rep.rows.front().value.value;
  bool all_exact = true;
  for (const auto& row : rep.rows) {
    rep.kappa = Interval::hull(rep.kappa, row.value.value);
    all_exact = all_exact && row.value.exact && *row.value.exact == *rep.rows.front().value.exact;
  }
  if (all_exact) rep.exact = rep.rows.front().value.exact;
  // Constant iff every row interval meets every other one.
  bool meet = true;
  for (const auto& a : rep.rows)
    for (const auto& b : rep.rows)
      if (mpfr_less_p(a.value.value.hi(), b.value.value.lo())) meet = false;
  rep.constant = meet && rep.notes.empty();
  return rep;
}

}  // namespace algdyn
