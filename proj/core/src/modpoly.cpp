#include "modpoly.hpp"

#include <algorithm>

#include "algdyn/errors.hpp"

namespace algdyn::detail {

std::uint64_t Fp::inv(std::uint64_t a) const {
  std::int64_t t = 0, nt = 1;
  std::int64_t r = static_cast<std::int64_t>(p_), nr = static_cast<std::int64_t>(a % p_);
  if (nr == 0) throw DomainError("inverse of zero modulo p");
  while (nr != 0) {
    std::int64_t q = r / nr;
    std::int64_t tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  if (t < 0) t += static_cast<std::int64_t>(p_);
  return static_cast<std::uint64_t>(t);
}

std::uint64_t Fp::reduce(const Int& z) const {
  Int r;
  mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), p_);
  return r.get_ui();
}

void Fp::trim(ModPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

ModPoly Fp::add(const ModPoly& a, const ModPoly& b) const {
  ModPoly c(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) c[i] = add(c[i], b[i]);
  trim(c);
  return c;
}

ModPoly Fp::sub(const ModPoly& a, const ModPoly& b) const {
  ModPoly c(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) c[i] = sub(c[i], b[i]);
  trim(c);
  return c;
}

ModPoly Fp::mul(const ModPoly& a, const ModPoly& b) const {
  if (a.empty() || b.empty()) return {};
  ModPoly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p_;
  }
  trim(c);
  return c;
}

ModPoly Fp::scale(const ModPoly& a, std::uint64_t c) const {
  ModPoly out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = mul(a[i], c);
  trim(out);
  return out;
}

void Fp::divmod(const ModPoly& a, const ModPoly& b, ModPoly& q, ModPoly& r) const {
  if (b.empty()) throw DomainError("polynomial division by zero modulo p");
  r = a;
  if (a.size() < b.size()) {
    q.clear();
    return;
  }
  q.assign(a.size() - b.size() + 1, 0);
  std::uint64_t inv_lc = inv(b.back());
  for (std::size_t i = a.size(); i-- >= b.size();) {
    std::uint64_t c = mul(r[i], inv_lc);
    q[i - (b.size() - 1)] = c;
    if (c != 0)
      for (std::size_t j = 0; j < b.size(); ++j) {
        std::size_t k = i - (b.size() - 1) + j;
        r[k] = sub(r[k], mul(c, b[j]));
      }
    if (i == b.size() - 1) break;
  }
  r.resize(b.size() - 1);
  trim(r);
  trim(q);
}

ModPoly Fp::rem(const ModPoly& a, const ModPoly& b) const {
  ModPoly q, r;
  divmod(a, b, q, r);
  return r;
}

ModPoly Fp::quo(const ModPoly& a, const ModPoly& b) const {
  ModPoly q, r;
  divmod(a, b, q, r);
  return q;
}

ModPoly Fp::monic(const ModPoly& a) const {
  if (a.empty()) return a;
  return scale(a, inv(a.back()));
}

ModPoly Fp::gcd(const ModPoly& a, const ModPoly& b) const {
  ModPoly x = a, y = b;
  while (!y.empty()) {
    ModPoly r = rem(x, y);
    x = std::move(y);
    y = std::move(r);
  }
  return monic(x);
}

ModPoly Fp::ext_gcd(const ModPoly& a, const ModPoly& b, ModPoly& s, ModPoly& t) const {
  ModPoly r0 = a, r1 = b;
  ModPoly s0{1}, s1, t0, t1{1};
  while (!r1.empty()) {
    ModPoly q, r;
    divmod(r0, r1, q, r);
    r0 = std::move(r1);
    r1 = std::move(r);
    ModPoly s2 = sub(s0, mul(q, s1));
    s0 = std::move(s1);
    s1 = std::move(s2);
    ModPoly t2 = sub(t0, mul(q, t1));
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  std::uint64_t c = r0.empty() ? 1 : inv(r0.back());
  s = scale(s0, c);
  t = scale(t0, c);
  return scale(r0, c);
}

ModPoly Fp::derivative(const ModPoly& a) const {
  if (a.size() <= 1) return {};
  ModPoly d(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) d[i - 1] = mul(a[i], i % p_);
  trim(d);
  return d;
}

ModPoly Fp::powmod(const ModPoly& base, const Int& e, const ModPoly& m) const {
  ModPoly result = rem(ModPoly{1}, m);
  ModPoly b = rem(base, m);
  std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = rem(mul(result, result), m);
    if (mpz_tstbit(e.get_mpz_t(), i)) result = rem(mul(result, b), m);
  }
  return result;
}

ModPoly Fp::from_ints(const std::vector<Int>& coeffs) const {
  ModPoly out(coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) out[i] = reduce(coeffs[i]);
  trim(out);
  return out;
}

std::vector<std::pair<ModPoly, int>> Fp::distinct_degree(const ModPoly& f) const {
  std::vector<std::pair<ModPoly, int>> out;
  ModPoly rest = f;
  ModPoly x{0, 1};
  ModPoly h = x;
  Int p(static_cast<unsigned long>(p_));
  for (int d = 1; 2 * d <= static_cast<int>(rest.size()) - 1; ++d) {
    h = powmod(h, p, rest);
    ModPoly g = gcd(rest, sub(h, x));
    if (g.size() > 1) {
      out.emplace_back(g, d);
      rest = quo(rest, g);
      h = rem(h, rest);
    }
  }
  if (rest.size() > 1) out.emplace_back(rest, static_cast<int>(rest.size()) - 1);
  return out;
}

std::vector<ModPoly> Fp::equal_degree(const ModPoly& f, int d, std::mt19937_64& rng) const {
  int n = static_cast<int>(f.size()) - 1;
  if (n == d) return {f};
  Int e = (pow(Int(static_cast<unsigned long>(p_)), static_cast<unsigned long>(d)) - 1) / 2;
  std::uniform_int_distribution<std::uint64_t> coin(0, p_ - 1);
  for (;;) {
    ModPoly a(static_cast<std::size_t>(n));
    for (auto& c : a) c = coin(rng);
    trim(a);
    if (a.size() <= 1) continue;
    ModPoly b = sub(powmod(a, e, f), ModPoly{1});
    ModPoly g = gcd(f, b);
    if (g.size() > 1 && g.size() < f.size()) {
      auto left = equal_degree(g, d, rng);
      auto right = equal_degree(quo(f, g), d, rng);
      left.insert(left.end(), right.begin(), right.end());
      return left;
    }
  }
}

std::vector<ModPoly> Fp::factor_squarefree(const ModPoly& f, std::mt19937_64& rng) const {
  std::vector<ModPoly> out;
  for (auto& [g, d] : distinct_degree(f)) {
    auto parts = equal_degree(g, d, rng);
    out.insert(out.end(), parts.begin(), parts.end());
  }
  std::sort(out.begin(), out.end(), [](const ModPoly& a, const ModPoly& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
  });
  return out;
}

}  // namespace algdyn::detail
