#pragma once

// Seeded generators for property tests and acceptance runs.

#include <cstdint>
#include <random>
#include <vector>

#include "algdyn/action.hpp"
#include "algdyn/factor.hpp"
#include "algdyn/numberfield.hpp"

namespace testgen {

using namespace algdyn;

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }

  Rat frac(long num, long den) {
    Rat q(num, den);
    q.canonicalize();
    return q;
  }

  RatPoly poly(int degree, long bound) {
    std::vector<Rat> c;
    for (int i = 0; i <= degree; ++i) c.push_back(Rat(uniform(-bound, bound)));
    return RatPoly(c);
  }

  /// Monic irreducible integer polynomial of the given degree with f(0) != 0.
  RatPoly irreducible(int degree, long bound) {
    while (true) {
      std::vector<Rat> c;
      for (int i = 0; i < degree; ++i) c.push_back(Rat(uniform(-bound, bound)));
      c.push_back(Rat(1));
      if (c[0] == 0) continue;
      RatPoly f(c);
      if (degree == 1 || is_irreducible(f)) return f;
    }
  }

  /// Nonzero element of degree < k with coefficients p/q, |p| <= bound, q in dens.
  RatPoly element(int k, long bound, const std::vector<long>& dens = {1}) {
    while (true) {
      std::vector<Rat> c;
      for (int i = 0; i < k; ++i) c.push_back(frac(uniform(-bound, bound), dens[uniform(0, dens.size() - 1)]));
      RatPoly g(c);
      if (!g.is_zero()) return g;
    }
  }

  NumberFieldAction field_action(int k, std::size_t d, long f_bound, long g_bound,
                                 const std::vector<long>& dens = {1}) {
    RatPoly f = irreducible(k, f_bound);
    std::vector<RatPoly> gs;
    for (std::size_t j = 0; j < d; ++j) gs.push_back(element(k, g_bound, dens));
    return make_number_field_action(f, gs);
  }

  /// Unimodular integer matrix built from elementary row operations.
  QMatrix unimodular(std::size_t m, int steps = 4) {
    QMatrix p = QMatrix::identity(m);
    if (m < 2) return p;
    for (int s = 0; s < steps; ++s) {
      std::size_t i = uniform(0, m - 1), j = uniform(0, m - 2);
      if (j >= i) ++j;
      long c = uniform(-2, 2);
      QMatrix e = QMatrix::identity(m);
      e(i, j) = c;
      p = e * p;
    }
    return p;
  }

  /// Commuting invertible matrices: polynomials in one matrix T whose
  /// characteristic polynomial is a product of random irreducible factors,
  /// possibly repeated, optionally direct-summed with a second such family,
  /// then conjugated by a unimodular matrix.
  std::vector<QMatrix> action(std::size_t max_m, std::size_t d) {
    std::size_t m = uniform(1, max_m);
    std::size_t first = m >= 2 && coin(0.3) ? uniform(1, m - 1) : m;
    std::vector<QMatrix> gens = family(first, d);
    if (first < m) {
      std::vector<QMatrix> rest = family(m - first, d);
      for (std::size_t j = 0; j < d; ++j) gens[j] = block_diag(gens[j], rest[j]);
    }
    QMatrix p = unimodular(m);
    QMatrix pinv = inverse(p);
    for (auto& g : gens) g = p * g * pinv;
    return gens;
  }

  /// Invertible matrix with rational entries p/q, |p| <= bound, q <= 3.
  QMatrix rational_matrix(std::size_t m, long bound) {
    while (true) {
      QMatrix a(m, m);
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) a(i, j) = frac(uniform(-bound, bound), uniform(1, 3));
      if (determinant(a) != 0) return a;
    }
  }

  /// Companion blocks of random irreducible factors, some doubled into
  /// [[C, I], [0, C]] so the unipotent part is nontrivial, then conjugated.
  QMatrix jordan_type(std::size_t max_m) {
    std::size_t m = uniform(1, max_m);
    QMatrix acc;
    while (acc.rows() < m) {
      std::size_t room = m - acc.rows();
      std::size_t k = uniform(1, std::min<std::size_t>(room, 3));
      QMatrix c = QMatrix::companion(irreducible(static_cast<int>(k), 3));
      QMatrix blk = c;
      if (2 * k <= room && coin(0.6)) {
        blk = block_diag(c, c);
        for (std::size_t i = 0; i < k; ++i) blk(i, k + i) = 1;
      }
      acc = acc.rows() == 0 ? blk : block_diag(acc, blk);
    }
    QMatrix p = unimodular(m, 6);
    return p * acc * inverse(p);
  }

 private:
  std::vector<QMatrix> family(std::size_t m, std::size_t d) {
    RatPoly chi = RatPoly::constant(Rat(1));
    while (chi.degree() < static_cast<int>(m)) {
      int room = static_cast<int>(m) - chi.degree();
      int k = static_cast<int>(uniform(1, std::min(room, 3)));
      RatPoly f = irreducible(k, 3);
      chi *= f;
      if (chi.degree() + k <= static_cast<int>(m) && coin(0.25)) chi *= f;
    }
    QMatrix t = QMatrix::companion(chi);
    std::vector<QMatrix> gens;
    while (gens.size() < d) {
      RatPoly p = poly(static_cast<int>(uniform(0, std::min<long>(m - 1, 2))), 3);
      if (p.is_zero()) continue;
      QMatrix a = evaluate(p, t);
      if (determinant(a) == 0) continue;
      gens.push_back(std::move(a));
    }
    return gens;
  }

  std::mt19937_64 rng_;
};

}  // namespace testgen
