#pragma once

#include <mpfr.h>

#include <string>

#include "algdyn/rat.hpp"

namespace algdyn {

/// Closed real interval with MPFR endpoints and outward rounding. Every
/// operation returns an interval containing the exact result for all
/// choices of operands in the inputs.
class Interval {
 public:
  explicit Interval(mpfr_prec_t prec = 128);
  Interval(const Rat& q, mpfr_prec_t prec);
  Interval(const Rat& lo, const Rat& hi, mpfr_prec_t prec);
  Interval(const Interval& o);
  Interval(Interval&& o) noexcept;
  Interval& operator=(const Interval& o);
  Interval& operator=(Interval&& o) noexcept;
  ~Interval();

  mpfr_prec_t precision() const { return mpfr_get_prec(lo_); }
  const mpfr_t& lo() const { return lo_; }
  const mpfr_t& hi() const { return hi_; }
  mpfr_t& lo() { return lo_; }
  mpfr_t& hi() { return hi_; }

  double lo_double() const { return mpfr_get_d(lo_, MPFR_RNDD); }
  double hi_double() const { return mpfr_get_d(hi_, MPFR_RNDU); }
  double mid_double() const;
  /// Upper bound on hi - lo.
  double width() const;
  /// Exact endpoints as rationals.
  Rat lo_rat() const;
  Rat hi_rat() const;

  bool contains_zero() const;
  bool contains(const Rat& q) const;
  bool is_positive() const { return mpfr_sgn(lo_) > 0; }
  bool is_negative() const { return mpfr_sgn(hi_) < 0; }
  /// +1 / -1 when certified, 0 when the interval straddles zero.
  int certified_sign() const;

  Interval operator-() const;
  friend Interval operator+(const Interval& a, const Interval& b);
  friend Interval operator-(const Interval& a, const Interval& b);
  friend Interval operator*(const Interval& a, const Interval& b);
  friend Interval operator/(const Interval& a, const Interval& b);
  Interval& operator+=(const Interval& o) { return *this = *this + o; }
  Interval& operator-=(const Interval& o) { return *this = *this - o; }
  Interval& operator*=(const Interval& o) { return *this = *this * o; }

  Interval scaled(const Rat& q) const;
  Interval abs() const;
  Interval sqr() const;
  Interval sqrt() const;
  /// Natural logarithm; requires a positive interval.
  Interval log() const;
  Interval max0() const;

  static Interval hull(const Interval& a, const Interval& b);
  static Interval log_of(const Rat& q, mpfr_prec_t prec);
  static Interval pi(mpfr_prec_t prec);

  /// "[lo, hi]" with the given number of significant digits.
  std::string str(int digits = 20) const;

 private:
  mpfr_t lo_, hi_;
};

/// Rectangular complex interval.
struct ComplexInterval {
  Interval re, im;

  explicit ComplexInterval(mpfr_prec_t prec = 128) : re(prec), im(prec) {}
  ComplexInterval(Interval r, Interval i) : re(std::move(r)), im(std::move(i)) {}

  friend ComplexInterval operator+(const ComplexInterval& a, const ComplexInterval& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend ComplexInterval operator-(const ComplexInterval& a, const ComplexInterval& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend ComplexInterval operator*(const ComplexInterval& a, const ComplexInterval& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend ComplexInterval operator/(const ComplexInterval& a, const ComplexInterval& b);
  ComplexInterval scaled(const Rat& q) const { return {re.scaled(q), im.scaled(q)}; }
  /// |z|^2.
  Interval norm() const { return re.sqr() + im.sqr(); }
  Interval abs() const { return norm().sqrt(); }
};

}  // namespace algdyn
