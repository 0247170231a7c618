#include "algdyn/primes.hpp"

#include <algorithm>

#include "algdyn/errors.hpp"

namespace algdyn {

bool is_prime(const Int& n) { return n >= 2 && mpz_probab_prime_p(n.get_mpz_t(), 40) > 0; }

namespace {

Int pollard_rho(const Int& n) {
  if (mpz_even_p(n.get_mpz_t())) return Int(2);
  for (unsigned long c = 1;; ++c) {
    Int x(2), y(2), d(1);
    auto step = [&](Int& v) {
      v = v * v + c;
      mpz_mod(v.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t());
    };
    while (d == 1) {
      step(x);
      step(y);
      step(y);
      Int diff = abs(x - y);
      d = gcd(diff, n);
    }
    if (d != n) return d;
  }
}

void split(const Int& n, std::vector<Int>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  Int m = n;
  for (unsigned long p = 2; p < 1000; ++p) {
    if (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      out.push_back(Int(p));
      while (mpz_divisible_ui_p(m.get_mpz_t(), p)) m /= p;
    }
  }
  if (m == 1) return;
  if (is_prime(m)) {
    out.push_back(m);
    return;
  }
  Int d = pollard_rho(m);
  split(d, out);
  Int rest = m;
  while (mpz_divisible_p(rest.get_mpz_t(), d.get_mpz_t())) rest /= d;
  split(rest, out);
}

}  // namespace

std::vector<Int> prime_divisors(const Int& n) {
  if (n == 0) throw DomainError("prime divisors of zero");
  std::vector<Int> out;
  split(abs(n), out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace algdyn
