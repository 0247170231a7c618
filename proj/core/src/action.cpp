#include "algdyn/action.hpp"

#include "algdyn/errors.hpp"
#include "algdyn/factor.hpp"
#include "algdyn/jordan.hpp"

namespace algdyn {

SeededInts::SeededInts(std::uint64_t seed) : engine_(seed) {}

std::uint64_t SeededInts::raw() { return engine_(); }

long SeededInts::next(long bound) {
  auto span = static_cast<std::uint64_t>(2 * bound + 1);
  return static_cast<long>(engine_() % span) - bound;
}

SolenoidAction SolenoidAction::make(std::vector<QMatrix> generators, std::string label) {
  SolenoidAction a;
  a.d = generators.size();
  a.m = generators.empty() ? 0 : generators.front().rows();
  a.generators = std::move(generators);
  a.label = std::move(label);
  return a;
}

QMatrix SolenoidAction::power(const IntVec& n) const {
  if (n.size() != d) throw DomainError("exponent vector has wrong length");
  QMatrix acc = QMatrix::identity(m);
  for (std::size_t j = 0; j < d; ++j)
    if (n[j] != 0) acc = acc * generators[j].pow(n[j]);
  return acc;
}

Diagnostics validate(const SolenoidAction& action) {
  Diagnostics diag;
  auto fail = [&](std::string msg) {
    diag.ok = false;
    diag.messages.push_back(std::move(msg));
  };
  if (action.d == 0 || action.generators.size() != action.d) {
    fail("rank d must be positive and match the number of generators");
    return diag;
  }
  if (action.m == 0) {
    fail("dimension m must be positive");
    return diag;
  }
  for (std::size_t j = 0; j < action.d; ++j) {
    const auto& g = action.generators[j];
    if (g.rows() != action.m || g.cols() != action.m) {
      fail("generator " + std::to_string(j + 1) + " is not " + std::to_string(action.m) + "x" +
           std::to_string(action.m));
      return diag;
    }
  }
  for (std::size_t j = 0; j < action.d; ++j)
    if (determinant(action.generators[j]) == 0)
      fail("generator " + std::to_string(j + 1) + " is not invertible");
  for (std::size_t i = 0; i < action.d; ++i)
    for (std::size_t j = i + 1; j < action.d; ++j)
      if (!commute(action.generators[i], action.generators[j]))
        fail("generators " + std::to_string(i + 1) + " and " + std::to_string(j + 1) + " do not commute");
  return diag;
}

std::vector<QMatrix> generated_algebra(const std::vector<QMatrix>& generators) {
  if (generators.empty()) throw DomainError("generated_algebra: no generators");
  std::size_t m = generators.front().rows();
  std::vector<RatVec> vecs{flatten(QMatrix::identity(m))};
  QSubspace span = QSubspace::span(vecs, m * m);
  std::vector<QMatrix> frontier{QMatrix::identity(m)};
  std::vector<QMatrix> members = frontier;
  while (!frontier.empty()) {
    std::vector<QMatrix> next;
    for (const auto& b : frontier)
      for (const auto& g : generators) {
        QMatrix c = b * g;
        RatVec v = flatten(c);
        if (span.contains(v)) continue;
        vecs.push_back(v);
        span = QSubspace::span(vecs, m * m);
        next.push_back(c);
      }
    frontier = std::move(next);
  }
  std::vector<QMatrix> out;
  for (const auto& v : span.basis()) out.push_back(unflatten(v, m, m));
  return out;
}

namespace {

QMatrix combine(const std::vector<QMatrix>& mats, const std::vector<long>& c) {
  QMatrix g(mats.front().rows(), mats.front().cols());
  for (std::size_t j = 0; j < mats.size(); ++j)
    if (c[j] != 0) g += mats[j] * Rat(c[j]);
  return g;
}

enum class Probe { Reducible, Field, Inconclusive };

// Examines one algebra element g. Reducible sets `witness`.
Probe probe(const QMatrix& g, std::size_t algebra_dim, std::uint64_t seed, QSubspace& witness) {
  RatPoly mp = minpoly(g);
  auto factors = factor_poly(mp, seed);
  if (factors.size() > 1 || factors.front().second > 1) {
    // Smallest kernel, ties broken by the echelon basis, so the choice is canonical.
    std::optional<QSubspace> best;
    for (const auto& [p, e] : factors) {
      QSubspace k = QSubspace::kernel_of(evaluate(p, g));
      if (!best || k.dim() < best->dim() || (k.dim() == best->dim() && k.basis() < best->basis())) best = k;
    }
    witness = *best;
    return Probe::Reducible;
  }
  if (static_cast<std::size_t>(mp.degree()) == algebra_dim) return Probe::Field;
  return Probe::Inconclusive;
}

}  // namespace

IrreducibilityResult irreducibility(const std::vector<QMatrix>& generators, std::uint64_t seed) {
  if (generators.empty()) throw DomainError("irreducibility: no generators");
  std::size_t m = generators.front().rows();
  IrreducibilityResult res;
  std::vector<QMatrix> basis = generated_algebra(generators);
  std::size_t dim = basis.size();
  auto conclude_field = [&]() {
    if (dim == m) {
      res.irreducible = true;
      return res;
    }
    // A is a field of degree dim < m; A e_1 is a proper invariant subspace.
    RatVec e(m);
    e[0] = 1;
    std::vector<RatVec> orbit;
    for (const auto& b : basis) orbit.push_back(b.apply(e));
    res.irreducible = false;
    res.witness = QSubspace::span(orbit, m);
    return res;
  };
  if (m == 1) {
    res.irreducible = true;
    return res;
  }
  QSubspace witness;
  std::vector<QMatrix> candidates = generators;
  SeededInts rng(seed);
  for (std::size_t attempt = 0; attempt < 32; ++attempt) {
    std::vector<long> c(basis.size());
    for (auto& x : c) x = rng.next(8);
    candidates.push_back(combine(basis, c));
  }
  for (const auto& b : basis) candidates.push_back(b);
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    Probe p = probe(candidates[i], dim, seed + i, witness);
    if (p == Probe::Reducible) {
      res.irreducible = false;
      res.witness = witness;
      return res;
    }
    if (p == Probe::Field) return conclude_field();
  }
  // Exhaustive fallback: pairwise sums of basis elements.
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      Probe p = probe(basis[i] + basis[j], dim, seed, witness);
      if (p == Probe::Reducible) {
        res.irreducible = false;
        res.witness = witness;
        return res;
      }
      if (p == Probe::Field) return conclude_field();
    }
  throw Error("irreducibility test undecided after the full retry ladder");
}

bool is_irreducible(const SolenoidAction& action, std::uint64_t seed) {
  return irreducibility(action.generators, seed).irreducible;
}

std::vector<QMatrix> restrict_all(const std::vector<QMatrix>& generators, const QSubspace& v) {
  std::vector<QMatrix> out;
  for (const auto& g : generators) out.push_back(v.restrict(g));
  return out;
}

std::vector<QMatrix> quotient_all(const std::vector<QMatrix>& generators, const QSubspace& v) {
  std::vector<QMatrix> out;
  for (const auto& g : generators) out.push_back(v.quotient(g));
  return out;
}

QSubspace minimal_invariant(const std::vector<QMatrix>& generators, std::uint64_t seed) {
  std::size_t m = generators.front().rows();
  IrreducibilityResult r = irreducibility(generators, seed);
  if (r.irreducible) return QSubspace::whole(m);
  const QSubspace& w = *r.witness;
  QSubspace inner = minimal_invariant(restrict_all(generators, w), seed);
  return inner.map(w.basis_matrix());
}

namespace {

// Adapted basis columns for a composition series of the generators.
std::vector<RatVec> adapted_basis(const std::vector<QMatrix>& generators, std::uint64_t seed,
                                  std::vector<std::size_t>& dims) {
  std::size_t m = generators.front().rows();
  QSubspace v1 = minimal_invariant(generators, seed);
  std::vector<RatVec> cols = v1.basis();
  dims.push_back(v1.dim());
  if (v1.is_whole()) return cols;
  auto free = v1.free_columns();
  std::vector<RatVec> rest = adapted_basis(quotient_all(generators, v1), seed, dims);
  for (const auto& q : rest) {
    RatVec lift(m);
    for (std::size_t i = 0; i < free.size(); ++i) lift[free[i]] = q[i];
    cols.push_back(std::move(lift));
  }
  return cols;
}

}  // namespace

InvariantFlag invariant_flag(const std::vector<QMatrix>& generators, std::uint64_t seed) {
  if (generators.empty()) throw DomainError("invariant_flag: no generators");
  std::size_t m = generators.front().rows();
  std::vector<std::size_t> dims;
  std::vector<RatVec> cols = adapted_basis(generators, seed, dims);
  InvariantFlag flag;
  flag.basis = QMatrix::from_columns(cols, m);
  QMatrix pinv = inverse(flag.basis);
  flag.subspaces.push_back(QSubspace(m));
  std::size_t off = 0;
  std::vector<std::size_t> offsets;
  for (std::size_t dim : dims) {
    offsets.push_back(off);
    off += dim;
    std::vector<RatVec> span(cols.begin(), cols.begin() + static_cast<long>(off));
    flag.subspaces.push_back(QSubspace::span(span, m));
  }
  flag.blocks.resize(dims.size());
  for (const auto& g : generators) {
    QMatrix t = pinv * g * flag.basis;
    for (std::size_t b = 0; b < dims.size(); ++b) {
      // Everything below the diagonal block must vanish.
      for (std::size_t i = offsets[b] + dims[b]; i < m; ++i)
        for (std::size_t j = offsets[b]; j < offsets[b] + dims[b]; ++j)
          if (t(i, j) != 0) throw Error("invariant_flag: adapted basis is not triangularizing");
      QMatrix blk(dims[b], dims[b]);
      for (std::size_t i = 0; i < dims[b]; ++i)
        for (std::size_t j = 0; j < dims[b]; ++j) blk(i, j) = t(offsets[b] + i, offsets[b] + j);
      flag.blocks[b].push_back(std::move(blk));
    }
  }
  return flag;
}

InvariantFlag invariant_flag(const SolenoidAction& action, std::uint64_t seed) {
  return invariant_flag(action.generators, seed);
}

std::vector<SocleComponent> socle_irreducibles(const std::vector<QMatrix>& generators, std::uint64_t seed) {
  if (generators.empty()) throw DomainError("socle_irreducibles: no generators");
  std::size_t m = generators.front().rows();
  QSubspace soc = QSubspace::whole(m);
  for (const auto& g : generators) {
    JordanChevalley jc = jordan_chevalley(g);
    soc = soc.intersect(QSubspace::kernel_of(jc.unipotent - QMatrix::identity(m)));
  }
  std::vector<QMatrix> on_soc = restrict_all(generators, soc);
  std::vector<QMatrix> basis = generated_algebra(on_soc);
  std::size_t dim = basis.size();
  QMatrix soc_basis = soc.basis_matrix();

  SeededInts rng(seed);
  std::vector<QMatrix> candidates = on_soc;
  for (std::size_t attempt = 0; attempt < 64; ++attempt) {
    std::vector<long> c(basis.size());
    for (auto& x : c) x = rng.next(8 + static_cast<long>(attempt));
    candidates.push_back(combine(basis, c));
  }
  for (const auto& g : candidates) {
    RatPoly mp = minpoly(g);
    if (static_cast<std::size_t>(mp.degree()) != dim) continue;
    std::vector<SocleComponent> out;
    for (const auto& [p, mult] : factor_poly(mp, seed)) {
      (void)mult;
      QMatrix pg = evaluate(p, g);
      QSubspace comp = QSubspace::kernel_of(pg);
      RatVec v = comp.basis().front();
      std::vector<RatVec> orbit;
      QMatrix power = QMatrix::identity(g.rows());
      for (int i = 0; i < p.degree(); ++i) {
        orbit.push_back(power.apply(v));
        power = power * g;
      }
      QSubspace rep = QSubspace::span(orbit, g.rows());
      SocleComponent sc;
      sc.isotypic = comp.map(soc_basis);
      sc.representative = rep.map(soc_basis);
      sc.block = restrict_all(generators, sc.representative);
      sc.multiplicity = comp.dim() / static_cast<std::size_t>(p.degree());
      out.push_back(std::move(sc));
    }
    return out;
  }
  throw Error("socle_irreducibles: no separating element found");
}

std::vector<SocleComponent> socle_irreducibles(const SolenoidAction& action, std::uint64_t seed) {
  return socle_irreducibles(action.generators, seed);
}

}  // namespace algdyn
