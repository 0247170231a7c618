#include "algdyn/rat.hpp"

#include "algdyn/errors.hpp"

namespace algdyn {

std::string to_string(const Rat& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_string(const Int& z) { return z.get_str(); }

namespace {

bool valid_integer(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') return false;
  return true;
}

Int parse_int(std::string_view s) {
  if (!valid_integer(s)) throw ParseError("invalid integer literal '" + std::string(s) + "'");
  std::string text(s[0] == '+' ? s.substr(1) : s);
  return Int(text, 10);
}

}  // namespace

Rat parse_rat(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rat(parse_int(text));
  Int num = parse_int(text.substr(0, slash));
  std::string_view den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+'))
    throw ParseError("denominator must be unsigned in '" + std::string(text) + "'");
  Int den = parse_int(den_text);
  if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

long valuation(const Int& z, const Int& p) {
  if (z == 0) throw DomainError("valuation of zero");
  Int rest = z;
  long v = 0;
  while (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t())) {
    mpz_divexact(rest.get_mpz_t(), rest.get_mpz_t(), p.get_mpz_t());
    ++v;
  }
  return v;
}

long valuation(const Rat& q, const Int& p) {
  return valuation(q.get_num(), p) - valuation(q.get_den(), p);
}

Rat pow(const Rat& base, long exponent) {
  if (exponent < 0) {
    if (base == 0) throw DomainError("negative power of zero");
    return pow(Rat(1) / base, -exponent);
  }
  Int num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num().get_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), base.get_den().get_mpz_t(), static_cast<unsigned long>(exponent));
  return Rat(num, den);
}

Int pow(const Int& base, unsigned long exponent) {
  Int out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

Int lcm(const Int& a, const Int& b) {
  Int out;
  mpz_lcm(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

Int gcd(const Int& a, const Int& b) {
  Int out;
  mpz_gcd(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

}  // namespace algdyn
