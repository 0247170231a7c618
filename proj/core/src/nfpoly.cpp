#include "algdyn/nfpoly.hpp"

#include "algdyn/errors.hpp"

namespace algdyn {

NumberFieldArith::NumberFieldArith(RatPoly f) : f_(std::move(f)) {
  if (f_.degree() < 1 || f_.leading() != 1) throw DomainError("number field modulus must be monic of degree >= 1");
}

NFPoly::NFPoly(const NumberFieldArith* field, std::vector<RatPoly> coeffs) : field_(field), coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c = field_->reduce(c);
  trim();
}

NFPoly NFPoly::from_rational(const NumberFieldArith* field, const RatPoly& p) {
  std::vector<RatPoly> c;
  for (const auto& a : p.coeffs()) c.push_back(RatPoly::constant(a));
  return NFPoly(field, std::move(c));
}

void NFPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

NFPoly NFPoly::monic() const {
  if (is_zero()) return *this;
  RatPoly inv = field_->inv(leading());
  std::vector<RatPoly> c;
  for (const auto& a : coeffs_) c.push_back(field_->mul(a, inv));
  return NFPoly(field_, std::move(c));
}

NFPoly NFPoly::shift(const RatPoly& c) const {
  // Horner: p(x + c).
  NFPoly lin(field_, {c, RatPoly::constant(Rat(1))});
  NFPoly acc(field_, {});
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * lin + NFPoly(field_, {*it});
  return acc;
}

NFPoly operator+(const NFPoly& a, const NFPoly& b) {
  const NumberFieldArith* f = a.field_ ? a.field_ : b.field_;
  std::vector<RatPoly> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] = a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
  return NFPoly(f, std::move(c));
}

NFPoly operator-(const NFPoly& a, const NFPoly& b) {
  const NumberFieldArith* f = a.field_ ? a.field_ : b.field_;
  std::vector<RatPoly> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] = a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] -= b.coeffs_[i];
  return NFPoly(f, std::move(c));
}

NFPoly operator*(const NFPoly& a, const NFPoly& b) {
  const NumberFieldArith* f = a.field_ ? a.field_ : b.field_;
  if (a.is_zero() || b.is_zero()) return NFPoly(f, {});
  std::vector<RatPoly> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return NFPoly(f, std::move(c));
}

std::pair<NFPoly, NFPoly> divmod(const NFPoly& a, const NFPoly& b) {
  if (b.is_zero()) throw DomainError("NFPoly division by zero");
  const NumberFieldArith* f = b.field();
  if (a.degree() < b.degree()) return {NFPoly(f, {}), a};
  std::vector<RatPoly> rem = a.coeffs();
  std::vector<RatPoly> quo(static_cast<std::size_t>(a.degree() - b.degree() + 1));
  RatPoly inv = f->inv(b.leading());
  int db = b.degree();
  for (int i = a.degree(); i >= db; --i) {
    RatPoly c = f->mul(rem[static_cast<std::size_t>(i)], inv);
    quo[static_cast<std::size_t>(i - db)] = c;
    if (c.is_zero()) continue;
    for (int j = 0; j <= db; ++j) {
      auto k = static_cast<std::size_t>(i - db + j);
      rem[k] = f->reduce(rem[k] - c * b.coeffs()[static_cast<std::size_t>(j)]);
    }
  }
  rem.resize(static_cast<std::size_t>(db));
  return {NFPoly(f, std::move(quo)), NFPoly(f, std::move(rem))};
}

NFPoly gcd(const NFPoly& a, const NFPoly& b) {
  NFPoly x = a, y = b;
  while (!y.is_zero()) {
    NFPoly r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

RatPoly norm(const NFPoly& g) {
  if (g.is_zero()) throw DomainError("norm of zero polynomial");
  const RatPoly& f = g.field()->modulus();
  int n = g.degree() * f.degree();
  std::vector<Rat> xs, ys;
  for (int t = 0; t <= n; ++t) {
    Rat x(t);
    // g(x, y) as a polynomial in y at fixed x.
    RatPoly gy;
    Rat xp(1);
    for (const auto& c : g.coeffs()) {
      gy += c * xp;
      xp *= x;
    }
    xs.push_back(x);
    ys.push_back(gy.is_zero() ? Rat(0) : resultant(f, gy));
  }
  return interpolate(xs, ys);
}

}  // namespace algdyn
