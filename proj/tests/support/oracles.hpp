#pragma once

// Independent reference computations. They share only exact arithmetic and
// squarefree splitting with the library, never its weights or entropy code.

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "algdyn/poly.hpp"
#include "algdyn/primes.hpp"
#include "algdyn/qmatrix.hpp"

namespace oracle {

using namespace algdyn;

/// det(xI - A) by Faddeev-LeVerrier.
inline RatPoly charpoly_fl(const QMatrix& a) {
  std::size_t m = a.rows();
  std::vector<Rat> c(m + 1);
  c[m] = 1;
  QMatrix mk(m, m);
  for (std::size_t k = 1; k <= m; ++k) {
    mk = a * mk + QMatrix::scalar(m, c[m - k + 1]);
    QMatrix am = a * mk;
    Rat tr(0);
    for (std::size_t i = 0; i < m; ++i) tr += am(i, i);
    c[m - k] = -tr / Rat(static_cast<long>(k));
  }
  return RatPoly(c);
}

/// All complex roots of a squarefree polynomial by Durand-Kerner.
inline std::vector<std::complex<long double>> roots_dk(const RatPoly& f) {
  using C = std::complex<long double>;
  int k = f.degree();
  std::vector<long double> a(k + 1);
  for (int i = 0; i <= k; ++i) a[i] = Rat(f.coeff(i) / f.leading()).get_d();
  long double r = 1;
  for (int i = 0; i < k; ++i) r = std::max(r, 1 + std::fabs(a[i]));
  std::vector<C> z(k);
  for (int i = 0; i < k; ++i) z[i] = std::polar(r * 0.7L, 0.4L + 2 * 3.14159265358979323846L * i / k);
  auto eval = [&](C x) {
    C s = 0;
    for (int i = k; i >= 0; --i) s = s * x + a[i];
    return s;
  };
  for (int it = 0; it < 2000; ++it) {
    long double move = 0;
    for (int i = 0; i < k; ++i) {
      C den = 1;
      for (int j = 0; j < k; ++j)
        if (j != i) den *= z[i] - z[j];
      C step = eval(z[i]) / den;
      z[i] -= step;
      move = std::max(move, std::abs(step));
    }
    if (move < 1e-17L) break;
  }
  return z;
}

/// Contracting-side entropy of the solenoid automorphism dual to a rational
/// matrix: exact p-adic parts sum_{v_p(l) > 0} v_p(l), and the archimedean
/// part sum_{|l| < 1} -log|l|, over the eigenvalues l with multiplicity.
struct Yuzvinskii {
  std::map<Int, Rat> padic;
  long double arch = 0;

  long double total() const {
    long double s = arch;
    for (const auto& [p, q] : padic) s += q.get_d() * std::log(static_cast<long double>(p.get_d()));
    return s;
  }
};

inline Yuzvinskii yuzvinskii(const QMatrix& a) {
  RatPoly chi = charpoly_fl(a);
  Yuzvinskii out;

  // Contracting roots at p have positive valuation; along the lower Newton
  // hull their valuations add up to v(a_0) - min_i v(a_i).
  std::vector<Int> primes;
  for (const auto& c : chi.coeffs()) {
    if (c == 0) continue;
    for (const Int& z : {Int(c.get_num()), Int(c.get_den())})
      if (abs(z) > 1)
        for (const auto& p : prime_divisors(z)) primes.push_back(p);
  }
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  for (const auto& p : primes) {
    long v0 = valuation(chi.coeff(0), p);
    long lo = v0;
    for (const auto& c : chi.coeffs())
      if (c != 0) lo = std::min(lo, valuation(c, p));
    if (v0 > lo) out.padic[p] = Rat(v0 - lo);
  }

  for (const auto& [factor, mult] : squarefree_decomposition(chi))
    for (const auto& z : roots_dk(factor)) {
      long double r = std::abs(z);
      if (r < 1) out.arch += -mult * std::log(r);
    }
  return out;
}

/// Clusters (c, delta) of embeddings theta -> r into Q_p, with
/// c_j = -v_p(g_j(r)), read off from roots of f lifted to p^precision.
/// Empty when f mod p does not split into distinct linear factors or a
/// valuation reaches the precision.
using Cluster = std::pair<std::vector<Rat>, unsigned>;

inline std::optional<std::vector<Cluster>> brute_padic_clusters(const RatPoly& f, const std::vector<RatPoly>& gs,
                                                                const Int& p, unsigned precision = 40) {
  int k = f.degree();
  std::vector<Int> fc;
  for (int i = 0; i <= k; ++i) {
    if (!is_integer(f.coeff(i))) return std::nullopt;
    fc.push_back(f.coeff(i).get_num());
  }
  Int big;
  mpz_pow_ui(big.get_mpz_t(), p.get_mpz_t(), precision);
  auto eval = [](const std::vector<Int>& c, const Int& x, const Int& mod) {
    Int s = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
      s = s * x + *it;
      mpz_mod(s.get_mpz_t(), s.get_mpz_t(), mod.get_mpz_t());
    }
    return s;
  };
  std::vector<Int> dfc;
  for (int i = 1; i <= k; ++i) dfc.push_back(fc[i] * i);

  std::vector<Int> roots;
  for (Int r = 0; r < p; ++r)
    if (eval(fc, r, p) == 0) roots.push_back(r);
  if (static_cast<int>(roots.size()) != k) return std::nullopt;
  for (auto& r : roots) {
    if (eval(dfc, r, p) == 0) return std::nullopt;
    for (int it = 0; it < 8; ++it) {
      Int inv, d = eval(dfc, r, big);
      mpz_invert(inv.get_mpz_t(), d.get_mpz_t(), big.get_mpz_t());
      r = r - eval(fc, r, big) * inv;
      mpz_mod(r.get_mpz_t(), r.get_mpz_t(), big.get_mpz_t());
    }
    if (eval(fc, r, big) != 0) return std::nullopt;
  }

  std::vector<std::vector<Rat>> tuples;
  for (const auto& r : roots) {
    std::vector<Rat> c;
    for (const auto& g : gs) {
      Int den = 1;
      for (const auto& a : g.coeffs()) den = lcm(den, Int(a.get_den()));
      std::vector<Int> gi;
      for (const auto& a : g.coeffs()) gi.push_back(Int(a * Rat(den)));
      Int val = eval(gi, r, big);
      if (val == 0) return std::nullopt;
      long v = 0;
      while (mpz_divisible_p(val.get_mpz_t(), p.get_mpz_t())) {
        val /= p;
        ++v;
      }
      c.push_back(Rat(-(v - valuation(den, p))));
    }
    tuples.push_back(std::move(c));
  }
  std::sort(tuples.begin(), tuples.end());
  std::vector<Cluster> out;
  for (const auto& t : tuples) {
    if (!out.empty() && out.back().first == t)
      ++out.back().second;
    else
      out.push_back({t, 1});
  }
  return out;
}

/// Roots of an integer polynomial in [0, p), by exhaustion.
inline std::vector<long> roots_mod_p(const RatPoly& f, long p) {
  std::vector<long> out;
  for (long r = 0; r < p; ++r) {
    Int s = 0;
    for (int i = f.degree(); i >= 0; --i) {
      s = s * r + Int(f.coeff(i).get_num());
      mpz_mod_ui(s.get_mpz_t(), s.get_mpz_t(), p);
    }
    if (s == 0) out.push_back(r);
  }
  return out;
}

/// Primes below the bound, by sieve.
inline std::vector<long> small_primes(long bound) {
  std::vector<bool> comp(bound, false);
  std::vector<long> out;
  for (long i = 2; i < bound; ++i) {
    if (comp[i]) continue;
    out.push_back(i);
    for (long j = i * i; j < bound; j += i) comp[j] = true;
  }
  return out;
}

}  // namespace oracle
