#include "algdyn/poly.hpp"

#include <algorithm>
#include <sstream>

#include "algdyn/errors.hpp"

namespace algdyn {

RatPoly::RatPoly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

RatPoly::RatPoly(std::initializer_list<Rat> coeffs) : coeffs_(coeffs) { trim(); }

RatPoly RatPoly::constant(const Rat& c) { return RatPoly(std::vector<Rat>{c}); }

RatPoly RatPoly::monomial(const Rat& c, int degree) {
  std::vector<Rat> v(static_cast<std::size_t>(degree) + 1);
  v.back() = c;
  return RatPoly(std::move(v));
}

RatPoly RatPoly::from_ints(const std::vector<long>& coeffs) {
  std::vector<Rat> v;
  v.reserve(coeffs.size());
  for (long c : coeffs) v.emplace_back(c);
  return RatPoly(std::move(v));
}

void RatPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rat RatPoly::coeff(int i) const {
  if (i < 0 || i > degree()) return Rat(0);
  return coeffs_[static_cast<std::size_t>(i)];
}

const Rat& RatPoly::leading() const {
  if (is_zero()) throw DomainError("leading coefficient of zero polynomial");
  return coeffs_.back();
}

Rat RatPoly::operator()(const Rat& x) const {
  Rat acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

RatPoly RatPoly::derivative() const {
  if (degree() < 1) return {};
  std::vector<Rat> v(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) v[i - 1] = coeffs_[i] * static_cast<long>(i);
  return RatPoly(std::move(v));
}

RatPoly RatPoly::monic() const {
  if (is_zero()) return {};
  RatPoly out = *this;
  Rat inv = Rat(1) / leading();
  for (auto& c : out.coeffs_) c *= inv;
  return out;
}

RatPoly RatPoly::compose(const RatPoly& inner) const {
  RatPoly acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= inner;
    acc += constant(*it);
  }
  return acc;
}

RatPoly RatPoly::pow(unsigned exponent) const {
  RatPoly result = constant(Rat(1));
  RatPoly base = *this;
  while (exponent) {
    if (exponent & 1u) result *= base;
    exponent >>= 1;
    if (exponent) base *= base;
  }
  return result;
}

RatPoly RatPoly::reflect() const {
  RatPoly out = *this;
  for (std::size_t i = 1; i < out.coeffs_.size(); i += 2) out.coeffs_[i] = -out.coeffs_[i];
  return out;
}

RatPoly RatPoly::primitive(Rat* unit) const {
  if (is_zero()) throw DomainError("zero polynomial");
  Int den_lcm(1), num_gcd(0);
  for (const auto& c : coeffs_) den_lcm = lcm(den_lcm, c.get_den());
  for (const auto& c : coeffs_) num_gcd = gcd(num_gcd, Int(c * den_lcm));
  Rat scale(den_lcm, num_gcd);
  scale.canonicalize();
  if (leading() < 0) scale = -scale;
  RatPoly out = *this * scale;
  if (unit) *unit = Rat(1) / scale;
  return out;
}

bool RatPoly::has_integer_coeffs() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rat& c) { return c.get_den() == 1; });
}

RatPoly& RatPoly::operator+=(const RatPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

RatPoly& RatPoly::operator-=(const RatPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

RatPoly& RatPoly::operator*=(const RatPoly& o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rat> v(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) v[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  coeffs_ = std::move(v);
  trim();
  return *this;
}

RatPoly& RatPoly::operator*=(const Rat& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

RatPoly RatPoly::operator-() const {
  RatPoly out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

std::string RatPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    Rat c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    bool neg = c < 0;
    Rat a = neg ? Rat(-c) : c;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    bool unit = a == 1;
    if (i == 0) {
      os << to_string(a);
    } else {
      if (!unit) os << to_string(a) << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  return os.str();
}

bool poly_less(const RatPoly& a, const RatPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; --i) {
    Rat ca = a.coeff(i), cb = b.coeff(i);
    if (ca != cb) return ca < cb;
  }
  return false;
}

std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  if (a.degree() < b.degree()) return {RatPoly{}, a};
  std::vector<Rat> rem = a.coeffs();
  std::vector<Rat> quo(static_cast<std::size_t>(a.degree() - b.degree() + 1));
  Rat inv_lc = Rat(1) / b.leading();
  int db = b.degree();
  for (int i = a.degree(); i >= db; --i) {
    Rat c = rem[static_cast<std::size_t>(i)] * inv_lc;
    quo[static_cast<std::size_t>(i - db)] = c;
    if (c == 0) continue;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(i - db + j)] -= c * b.coeffs()[static_cast<std::size_t>(j)];
  }
  rem.resize(static_cast<std::size_t>(db));
  return {RatPoly(std::move(quo)), RatPoly(std::move(rem))};
}

RatPoly operator/(const RatPoly& a, const RatPoly& b) { return divmod(a, b).first; }
RatPoly operator%(const RatPoly& a, const RatPoly& b) { return divmod(a, b).second; }

RatPoly gcd(const RatPoly& a, const RatPoly& b) {
  RatPoly x = a, y = b;
  while (!y.is_zero()) {
    RatPoly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

ExtGcd ext_gcd(const RatPoly& a, const RatPoly& b) {
  RatPoly r0 = a, r1 = b;
  RatPoly s0 = RatPoly::constant(Rat(1)), s1;
  RatPoly t0, t1 = RatPoly::constant(Rat(1));
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    RatPoly s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    RatPoly t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  Rat inv = Rat(1) / r0.leading();
  return {r0 * inv, s0 * inv, t0 * inv};
}

RatPoly inverse_mod(const RatPoly& a, const RatPoly& m) {
  ExtGcd e = ext_gcd(a % m, m);
  if (e.g.degree() != 0) throw DomainError("element is not invertible modulo " + m.str());
  return e.s % m;
}

RatPoly powmod(const RatPoly& base, long exponent, const RatPoly& m) {
  RatPoly b = exponent < 0 ? inverse_mod(base, m) : base % m;
  unsigned long e = static_cast<unsigned long>(exponent < 0 ? -exponent : exponent);
  RatPoly result = RatPoly::constant(Rat(1)) % m;
  while (e) {
    if (e & 1ul) result = (result * b) % m;
    e >>= 1;
    if (e) b = (b * b) % m;
  }
  return result;
}

std::vector<std::pair<RatPoly, int>> squarefree_decomposition(const RatPoly& f) {
  if (f.is_zero()) throw DomainError("zero polynomial");
  std::vector<std::pair<RatPoly, int>> out;
  if (f.degree() == 0) return out;
  RatPoly fm = f.monic();
  RatPoly fp = fm.derivative();
  RatPoly a = gcd(fm, fp);
  RatPoly b = fm / a;
  RatPoly c = fp / a;
  RatPoly d = c - b.derivative();
  int i = 1;
  while (b.degree() > 0) {
    RatPoly g = gcd(b, d);
    b = b / g;
    c = d / g;
    if (g.degree() > 0) out.emplace_back(g.monic(), i);
    d = c - b.derivative();
    ++i;
    if (b.degree() <= 0) break;
  }
  return out;
}

RatPoly squarefree_part(const RatPoly& f) {
  if (f.degree() <= 0) return f.is_zero() ? f : RatPoly::constant(Rat(1));
  RatPoly fm = f.monic();
  return fm / gcd(fm, fm.derivative());
}

Rat resultant(const RatPoly& f, const RatPoly& g) {
  if (f.is_zero() || g.is_zero()) throw DomainError("resultant of zero polynomial");
  RatPoly a = f, b = g;
  Rat acc(1);
  for (;;) {
    int n = a.degree(), m = b.degree();
    if (m == 0) return acc * pow(b.leading(), n);
    if (n == 0) return acc * pow(a.leading(), m);
    // res(a, b) = (-1)^{nm} res(b, a) and res(b, a) = lc(b)^{n - deg r} res(b, r).
    RatPoly r = a % b;
    if (r.is_zero()) return Rat(0);
    if ((static_cast<long>(n) * m) % 2 == 1) acc = -acc;
    acc *= pow(b.leading(), n - r.degree());
    a = std::move(b);
    b = std::move(r);
  }
}

RatPoly interpolate(const std::vector<Rat>& xs, const std::vector<Rat>& ys) {
  if (xs.size() != ys.size()) throw DomainError("interpolate: size mismatch");
  // Newton divided differences.
  std::size_t n = xs.size();
  std::vector<Rat> dd = ys;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = n - 1; i >= j; --i) {
      Rat den = xs[i] - xs[i - j];
      if (den == 0) throw DomainError("interpolate: repeated node");
      dd[i] = (dd[i] - dd[i - 1]) / den;
      if (i == j) break;
    }
  RatPoly out;
  for (std::size_t k = n; k-- > 0;) {
    out *= RatPoly{-xs[k], Rat(1)};
    out += RatPoly::constant(dd[k]);
  }
  return out;
}

unsigned long euler_phi(unsigned long n) {
  unsigned long result = n;
  for (unsigned long p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

RatPoly cyclotomic(unsigned n) {
  if (n == 0) throw DomainError("cyclotomic order must be positive");
  RatPoly acc = RatPoly::monomial(Rat(1), static_cast<int>(n)) - RatPoly::constant(Rat(1));
  for (unsigned d = 1; d < n; ++d)
    if (n % d == 0) acc = acc / cyclotomic(d);
  return acc;
}

namespace {

std::vector<RatPoly> sturm_chain(const RatPoly& f) {
  std::vector<RatPoly> chain;
  RatPoly p0 = squarefree_part(f);
  chain.push_back(p0);
  chain.push_back(p0.derivative());
  while (!chain.back().is_zero() && chain.back().degree() > 0) {
    RatPoly r = chain[chain.size() - 2] % chain.back();
    if (r.is_zero()) break;
    chain.push_back(-r);
  }
  return chain;
}

int variations(const std::vector<int>& signs) {
  int count = 0, last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

int variations_at(const std::vector<RatPoly>& chain, const Rat& x) {
  std::vector<int> s;
  for (const auto& p : chain) s.push_back(sgn(p(x)));
  return variations(s);
}

int variations_at_infinity(const std::vector<RatPoly>& chain, bool positive) {
  std::vector<int> s;
  for (const auto& p : chain) {
    if (p.is_zero()) continue;
    int sg = sgn(p.leading());
    if (!positive && p.degree() % 2 == 1) sg = -sg;
    s.push_back(sg);
  }
  return variations(s);
}

}  // namespace

int count_real_roots(const RatPoly& f, const Rat& a, const Rat& b) {
  if (f.degree() < 1) return 0;
  auto chain = sturm_chain(f);
  return variations_at(chain, a) - variations_at(chain, b);
}

int count_real_roots(const RatPoly& f) {
  if (f.degree() < 1) return 0;
  auto chain = sturm_chain(f);
  return variations_at_infinity(chain, false) - variations_at_infinity(chain, true);
}

Rat root_bound(const RatPoly& f) {
  if (f.degree() < 1) return Rat(1);
  Rat lc = f.leading();
  Rat m(0);
  for (int i = 0; i < f.degree(); ++i) {
    Rat c = abs(f.coeff(i) / lc);
    if (c > m) m = c;
  }
  return m + 1;
}

}  // namespace algdyn
