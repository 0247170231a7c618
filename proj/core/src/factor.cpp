#include "algdyn/factor.hpp"

#include <algorithm>
#include <random>

#include "algdyn/errors.hpp"
#include "modpoly.hpp"

namespace algdyn {

using detail::Fp;
using detail::ModPoly;

std::vector<Int> integer_coeffs(const RatPoly& f) {
  std::vector<Int> out;
  out.reserve(f.coeffs().size());
  for (const auto& c : f.coeffs()) {
    if (c.get_den() != 1) throw DomainError("integer_coeffs: non-integral coefficient");
    out.push_back(c.get_num());
  }
  return out;
}

namespace {

// Polynomials with integer coefficients reduced modulo a big modulus M.
using ZPoly = std::vector<Int>;

void ztrim(ZPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

ZPoly zreduce(ZPoly a, const Int& m) {
  for (auto& c : a) mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
  ztrim(a);
  return a;
}

ZPoly zadd(const ZPoly& a, const ZPoly& b, const Int& m) {
  ZPoly c(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) c[i] += b[i];
  return zreduce(std::move(c), m);
}

ZPoly zsub(const ZPoly& a, const ZPoly& b, const Int& m) {
  ZPoly c(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) c[i] -= b[i];
  return zreduce(std::move(c), m);
}

ZPoly zmul(const ZPoly& a, const ZPoly& b, const Int& m) {
  if (a.empty() || b.empty()) return {};
  ZPoly c(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return zreduce(std::move(c), m);
}

// Division by a monic polynomial modulo m.
void zdivmod(const ZPoly& a, const ZPoly& h, const Int& m, ZPoly& q, ZPoly& r) {
  r = a;
  if (a.size() < h.size()) {
    q.clear();
    return;
  }
  std::size_t dh = h.size() - 1;
  q.assign(a.size() - dh, Int(0));
  for (std::size_t i = a.size(); i-- > dh;) {
    Int c = r[i];
    mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    q[i - dh] = c;
    if (c != 0)
      for (std::size_t j = 0; j <= dh; ++j) r[i - dh + j] -= c * h[j];
  }
  r.resize(dh);
  r = zreduce(std::move(r), m);
  q = zreduce(std::move(q), m);
}

ZPoly lift_mod(const ModPoly& a) {
  ZPoly out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = Int(static_cast<unsigned long>(a[i]));
  return out;
}

// One quadratic Hensel step: f = g*h mod m (h monic), s*g + t*h = 1 mod m;
// returns the same data valid modulo m2 (m2 divides m^2).
void hensel_step(const ZPoly& f, ZPoly& g, ZPoly& h, ZPoly& s, ZPoly& t, const Int& m2) {
  ZPoly e = zsub(f, zmul(g, h, m2), m2);
  ZPoly q, r;
  zdivmod(zmul(s, e, m2), h, m2, q, r);
  ZPoly g2 = zadd(g, zadd(zmul(t, e, m2), zmul(q, g, m2), m2), m2);
  ZPoly h2 = zadd(h, r, m2);
  ZPoly b = zsub(zadd(zmul(s, g2, m2), zmul(t, h2, m2), m2), ZPoly{Int(1)}, m2);
  ZPoly c, d;
  zdivmod(zmul(s, b, m2), h2, m2, c, d);
  s = zsub(s, d, m2);
  t = zsub(t, zadd(zmul(t, b, m2), zmul(c, g2, m2), m2), m2);
  g = std::move(g2);
  h = std::move(h2);
}

// Lifts f = lc * prod(factors) mod p to modulus M = p^k. Factors are monic.
std::vector<ZPoly> multi_lift(const ZPoly& f, const std::vector<ModPoly>& factors, const Fp& fp,
                              const Int& M) {
  std::vector<ZPoly> lifted(factors.size());
  ZPoly current = zreduce(f, M);
  Int p(static_cast<unsigned long>(fp.p()));
  for (std::size_t i = factors.size(); i-- > 1;) {
    // current = g * h with h = factors[i], g = lc * prod(factors[0..i-1]).
    ModPoly gbar{fp.reduce(current.back())};
    for (std::size_t j = 0; j < i; ++j) gbar = fp.mul(gbar, factors[j]);
    ModPoly s_bar, t_bar;
    fp.ext_gcd(gbar, factors[i], s_bar, t_bar);
    ZPoly g = lift_mod(gbar), h = lift_mod(factors[i]);
    ZPoly s = lift_mod(s_bar), t = lift_mod(t_bar);
    Int m = p;
    while (m < M) {
      Int m2 = m * m;
      if (m2 > M) m2 = M;
      hensel_step(current, g, h, s, t, m2);
      m = m2;
    }
    lifted[i] = h;
    current = g;
  }
  // The remaining cofactor is lc * factors[0]; make it monic.
  Int lc = current.back();
  Int inv;
  mpz_invert(inv.get_mpz_t(), lc.get_mpz_t(), M.get_mpz_t());
  for (auto& c : current) c *= inv;
  lifted[0] = zreduce(std::move(current), M);
  return lifted;
}

ZPoly symmetric(ZPoly a, const Int& M) {
  Int half = M / 2;
  for (auto& c : a) {
    mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), M.get_mpz_t());
    if (c > half) c -= M;
  }
  ztrim(a);
  return a;
}

RatPoly to_rat(const ZPoly& a) {
  std::vector<Rat> v(a.begin(), a.end());
  return RatPoly(std::move(v));
}

struct PrimeChoice {
  std::uint64_t p = 0;
  std::vector<ModPoly> factors;
};

bool is_small_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

PrimeChoice choose_prime(const std::vector<Int>& f, std::mt19937_64& rng) {
  PrimeChoice best;
  int good = 0;
  std::size_t best_count = 0;
  for (std::uint64_t p = 3; good < 5 && p < 100000; p += 2) {
    if (!is_small_prime(p)) continue;
    Fp fp(p);
    if (fp.reduce(f.back()) == 0) continue;
    ModPoly fbar = fp.from_ints(f);
    if (fp.gcd(fbar, fp.derivative(fbar)).size() != 1) continue;
    ++good;
    ModPoly fm = fp.monic(fbar);
    std::size_t count = 0;
    for (auto& [g, d] : fp.distinct_degree(fm)) count += (g.size() - 1) / static_cast<std::size_t>(d);
    if (best.p == 0 || count < best_count) {
      best.p = p;
      best_count = count;
      best.factors = {fm};
    }
    if (count == 1) break;
  }
  if (best.p == 0) throw Error("no good prime found for factorization");
  Fp fp(best.p);
  best.factors = fp.factor_squarefree(best.factors.front(), rng);
  return best;
}

Int norm2_ceil(const std::vector<Int>& f) {
  Int sum(0);
  for (const auto& c : f) sum += c * c;
  Int r;
  mpz_sqrt(r.get_mpz_t(), sum.get_mpz_t());
  return r + 1;
}

// Zassenhaus for a squarefree integer-primitive polynomial of degree >= 2.
std::vector<RatPoly> zassenhaus(const RatPoly& f, std::mt19937_64& rng) {
  std::vector<Int> fi = integer_coeffs(f);
  PrimeChoice choice = choose_prime(fi, rng);
  if (choice.factors.size() <= 1) return {f};
  Fp fp(choice.p);
  int n = f.degree();
  Int lc = fi.back();
  Int bound = 2 * abs(lc) * pow(Int(2), static_cast<unsigned long>(n)) * norm2_ceil(fi) * abs(lc);
  Int p(static_cast<unsigned long>(choice.p));
  Int M = p;
  while (M <= bound) M *= p;
  std::vector<ZPoly> lifted = multi_lift(fi, choice.factors, fp, M);

  std::vector<RatPoly> found;
  RatPoly rest = f;
  std::vector<ZPoly> remaining = lifted;
  std::size_t s = 1;
  while (2 * s <= remaining.size()) {
    bool hit = false;
    std::size_t r = remaining.size();
    std::vector<std::size_t> idx(s);
    for (std::size_t i = 0; i < s; ++i) idx[i] = i;
    Int lc_rest = rest.leading().get_num();
    Int c0 = rest.coeff(0).get_num();
    for (;;) {
      ZPoly g{lc_rest};
      for (std::size_t i : idx) g = zmul(g, remaining[i], M);
      g = symmetric(std::move(g), M);
      bool ok = true;
      if (c0 != 0 && !g.empty() && g.front() != 0) {
        Int prod = lc_rest * c0;
        ok = mpz_divisible_p(prod.get_mpz_t(), g.front().get_mpz_t()) != 0;
      }
      if (ok && !g.empty()) {
        RatPoly cand = to_rat(g).primitive();
        auto [q, rr] = divmod(rest, cand);
        if (rr.is_zero() && q.has_integer_coeffs()) {
          found.push_back(cand);
          rest = q.primitive();
          std::vector<ZPoly> keep;
          for (std::size_t i = 0, k = 0; i < r; ++i) {
            if (k < s && idx[k] == i) {
              ++k;
              continue;
            }
            keep.push_back(remaining[i]);
          }
          remaining = std::move(keep);
          hit = true;
          break;
        }
      }
      // next combination
      std::size_t pos = s;
      while (pos > 0 && idx[pos - 1] == r - s + pos - 1) --pos;
      if (pos == 0) break;
      ++idx[pos - 1];
      for (std::size_t i = pos; i < s; ++i) idx[i] = idx[i - 1] + 1;
    }
    if (!hit) ++s;
  }
  if (rest.degree() > 0) found.push_back(rest.primitive());
  return found;
}

}  // namespace

std::vector<RatPoly> factor_squarefree(const RatPoly& f, std::uint64_t seed) {
  if (f.is_zero()) throw DomainError("zero polynomial");
  if (f.degree() <= 0) return {};
  RatPoly g = f.primitive();
  std::vector<RatPoly> out;
  if (g.coeff(0) == 0) {
    out.push_back(RatPoly::x());
    g = (g / RatPoly::x()).primitive();
  }
  if (g.degree() == 1) {
    out.push_back(g);
  } else if (g.degree() > 1) {
    std::mt19937_64 rng(seed);
    auto parts = zassenhaus(g, rng);
    out.insert(out.end(), parts.begin(), parts.end());
  }
  std::sort(out.begin(), out.end(), poly_less);
  return out;
}

std::vector<std::pair<RatPoly, int>> factor_poly(const RatPoly& f, std::uint64_t seed) {
  if (f.is_zero()) throw DomainError("zero polynomial");
  std::vector<std::pair<RatPoly, int>> out;
  for (auto& [part, mult] : squarefree_decomposition(f))
    for (auto& q : factor_squarefree(part, seed)) out.emplace_back(q, mult);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.first == b.first) return a.second < b.second;
    return poly_less(a.first, b.first);
  });
  return out;
}

bool is_irreducible(const RatPoly& f, std::uint64_t seed) {
  if (f.degree() < 1) return false;
  auto fs = factor_poly(f, seed);
  return fs.size() == 1 && fs.front().second == 1;
}

}  // namespace algdyn
