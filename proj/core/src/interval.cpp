#include "algdyn/interval.hpp"

#include <algorithm>
#include <cstdio>
#include <vector>

#include "algdyn/errors.hpp"

namespace algdyn {

Interval::Interval(mpfr_prec_t prec) {
  mpfr_init2(lo_, prec);
  mpfr_init2(hi_, prec);
  mpfr_set_zero(lo_, 1);
  mpfr_set_zero(hi_, 1);
}

Interval::Interval(const Rat& q, mpfr_prec_t prec) {
  mpfr_init2(lo_, prec);
  mpfr_init2(hi_, prec);
  mpfr_set_q(lo_, q.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(hi_, q.get_mpq_t(), MPFR_RNDU);
}

Interval::Interval(const Rat& lo, const Rat& hi, mpfr_prec_t prec) {
  if (lo > hi) throw DomainError("interval with lo > hi");
  mpfr_init2(lo_, prec);
  mpfr_init2(hi_, prec);
  mpfr_set_q(lo_, lo.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(hi_, hi.get_mpq_t(), MPFR_RNDU);
}

Interval::Interval(const Interval& o) {
  mpfr_init2(lo_, o.precision());
  mpfr_init2(hi_, o.precision());
  mpfr_set(lo_, o.lo_, MPFR_RNDD);
  mpfr_set(hi_, o.hi_, MPFR_RNDU);
}

Interval::Interval(Interval&& o) noexcept : Interval(o.precision()) {
  mpfr_swap(lo_, o.lo_);
  mpfr_swap(hi_, o.hi_);
}

Interval& Interval::operator=(const Interval& o) {
  if (this == &o) return *this;
  mpfr_set_prec(lo_, o.precision());
  mpfr_set_prec(hi_, o.precision());
  mpfr_set(lo_, o.lo_, MPFR_RNDD);
  mpfr_set(hi_, o.hi_, MPFR_RNDU);
  return *this;
}

Interval& Interval::operator=(Interval&& o) noexcept {
  mpfr_swap(lo_, o.lo_);
  mpfr_swap(hi_, o.hi_);
  return *this;
}

Interval::~Interval() {
  mpfr_clear(lo_);
  mpfr_clear(hi_);
}

double Interval::mid_double() const { return 0.5 * (lo_double() + hi_double()); }

double Interval::width() const {
  mpfr_t w;
  mpfr_init2(w, precision());
  mpfr_sub(w, hi_, lo_, MPFR_RNDU);
  double d = mpfr_get_d(w, MPFR_RNDU);
  mpfr_clear(w);
  return d;
}

namespace {

Rat to_rat(const mpfr_t x) {
  if (!mpfr_number_p(x)) throw CertificationError("interval", "non-finite interval endpoint");
  if (mpfr_zero_p(x)) return Rat(0);
  Int mant;
  mpfr_exp_t e = mpfr_get_z_2exp(mant.get_mpz_t(), x);
  Rat q(mant);
  if (e >= 0) {
    mpq_mul_2exp(q.get_mpq_t(), q.get_mpq_t(), static_cast<unsigned long>(e));
  } else {
    mpq_div_2exp(q.get_mpq_t(), q.get_mpq_t(), static_cast<unsigned long>(-e));
  }
  return q;
}

mpfr_prec_t join(const Interval& a, const Interval& b) { return std::max(a.precision(), b.precision()); }

}  // namespace

Rat Interval::lo_rat() const { return to_rat(lo_); }
Rat Interval::hi_rat() const { return to_rat(hi_); }

bool Interval::contains_zero() const { return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0; }

bool Interval::contains(const Rat& q) const {
  return mpfr_cmp_q(lo_, q.get_mpq_t()) <= 0 && mpfr_cmp_q(hi_, q.get_mpq_t()) >= 0;
}

int Interval::certified_sign() const {
  if (is_positive()) return 1;
  if (is_negative()) return -1;
  return 0;
}

Interval Interval::operator-() const {
  Interval r(precision());
  mpfr_neg(r.lo_, hi_, MPFR_RNDD);
  mpfr_neg(r.hi_, lo_, MPFR_RNDU);
  return r;
}

Interval operator+(const Interval& a, const Interval& b) {
  Interval r(join(a, b));
  mpfr_add(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_add(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return r;
}

Interval operator-(const Interval& a, const Interval& b) {
  Interval r(join(a, b));
  mpfr_sub(r.lo_, a.lo_, b.hi_, MPFR_RNDD);
  mpfr_sub(r.hi_, a.hi_, b.lo_, MPFR_RNDU);
  return r;
}

Interval operator*(const Interval& a, const Interval& b) {
  mpfr_prec_t p = join(a, b);
  Interval r(p);
  mpfr_t t;
  mpfr_init2(t, p);
  const mpfr_t* xs[2] = {&a.lo_, &a.hi_};
  const mpfr_t* ys[2] = {&b.lo_, &b.hi_};
  bool first = true;
  for (auto x : xs)
    for (auto y : ys) {
      mpfr_mul(t, *x, *y, MPFR_RNDD);
      if (first || mpfr_less_p(t, r.lo_)) mpfr_set(r.lo_, t, MPFR_RNDD);
      mpfr_mul(t, *x, *y, MPFR_RNDU);
      if (first || mpfr_greater_p(t, r.hi_)) mpfr_set(r.hi_, t, MPFR_RNDU);
      first = false;
    }
  mpfr_clear(t);
  return r;
}

Interval operator/(const Interval& a, const Interval& b) {
  if (b.contains_zero()) throw CertificationError("interval", "division by an interval containing zero");
  mpfr_prec_t p = join(a, b);
  Interval inv(p);
  mpfr_ui_div(inv.lo_, 1, b.hi_, MPFR_RNDD);
  mpfr_ui_div(inv.hi_, 1, b.lo_, MPFR_RNDU);
  return a * inv;
}

Interval Interval::scaled(const Rat& q) const { return *this * Interval(q, precision()); }

Interval Interval::abs() const {
  if (mpfr_sgn(lo_) >= 0) return *this;
  if (mpfr_sgn(hi_) <= 0) return -*this;
  Interval r(precision());
  mpfr_set_zero(r.lo_, 1);
  mpfr_neg(r.hi_, lo_, MPFR_RNDU);
  if (mpfr_greater_p(hi_, r.hi_)) mpfr_set(r.hi_, hi_, MPFR_RNDU);
  return r;
}

Interval Interval::sqr() const {
  Interval a = abs();
  Interval r(precision());
  mpfr_sqr(r.lo_, a.lo_, MPFR_RNDD);
  mpfr_sqr(r.hi_, a.hi_, MPFR_RNDU);
  return r;
}

Interval Interval::sqrt() const {
  if (mpfr_sgn(hi_) < 0) throw CertificationError("interval", "square root of a negative interval");
  Interval r(precision());
  if (mpfr_sgn(lo_) <= 0)
    mpfr_set_zero(r.lo_, 1);
  else
    mpfr_sqrt(r.lo_, lo_, MPFR_RNDD);
  mpfr_sqrt(r.hi_, hi_, MPFR_RNDU);
  return r;
}

Interval Interval::log() const {
  if (mpfr_sgn(lo_) <= 0) throw CertificationError("interval", "logarithm of a non-positive interval");
  Interval r(precision());
  mpfr_log(r.lo_, lo_, MPFR_RNDD);
  mpfr_log(r.hi_, hi_, MPFR_RNDU);
  return r;
}

Interval Interval::max0() const {
  Interval r = *this;
  if (mpfr_sgn(r.lo_) < 0) mpfr_set_zero(r.lo_, 1);
  if (mpfr_sgn(r.hi_) < 0) mpfr_set_zero(r.hi_, 1);
  return r;
}

Interval Interval::hull(const Interval& a, const Interval& b) {
  Interval r(join(a, b));
  mpfr_min(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_max(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return r;
}

Interval Interval::log_of(const Rat& q, mpfr_prec_t prec) {
  if (q <= 0) throw DomainError("log of a non-positive rational");
  return Interval(q, prec).log();
}

Interval Interval::pi(mpfr_prec_t prec) {
  Interval r(prec);
  mpfr_const_pi(r.lo_, MPFR_RNDD);
  mpfr_const_pi(r.hi_, MPFR_RNDU);
  return r;
}

std::string Interval::str(int digits) const {
  std::vector<char> buf(static_cast<std::size_t>(digits) + 64);
  std::string out = "[";
  mpfr_snprintf(buf.data(), buf.size(), "%.*RDe", digits - 1, lo_);
  out += buf.data();
  out += ", ";
  mpfr_snprintf(buf.data(), buf.size(), "%.*RUe", digits - 1, hi_);
  out += buf.data();
  out += "]";
  return out;
}

ComplexInterval operator/(const ComplexInterval& a, const ComplexInterval& b) {
  Interval n = b.norm();
  ComplexInterval num = a * ComplexInterval(b.re, -b.im);
  return {num.re / n, num.im / n};
}

}  // namespace algdyn
