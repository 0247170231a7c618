#pragma once

#include <vector>

#include "algdyn/poly.hpp"

namespace algdyn {

/// Arithmetic in K = Q[y]/(f) for a monic irreducible f; elements are
/// reduced polynomials of degree < deg f.
class NumberFieldArith {
 public:
  explicit NumberFieldArith(RatPoly f);
  const RatPoly& modulus() const { return f_; }
  int degree() const { return f_.degree(); }

  RatPoly reduce(const RatPoly& a) const { return a % f_; }
  RatPoly mul(const RatPoly& a, const RatPoly& b) const { return (a * b) % f_; }
  RatPoly inv(const RatPoly& a) const { return inverse_mod(a, f_); }
  RatPoly pow(const RatPoly& a, long e) const { return powmod(a, e, f_); }

 private:
  RatPoly f_;
};

/// Univariate polynomial with coefficients in a number field, ascending degree.
class NFPoly {
 public:
  NFPoly() = default;
  NFPoly(const NumberFieldArith* field, std::vector<RatPoly> coeffs);
  /// Lifts a rational polynomial (constant coefficients).
  static NFPoly from_rational(const NumberFieldArith* field, const RatPoly& p);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<RatPoly>& coeffs() const { return coeffs_; }
  const RatPoly& leading() const { return coeffs_.back(); }
  const NumberFieldArith* field() const { return field_; }

  NFPoly monic() const;
  /// x -> x + c for a field element c.
  NFPoly shift(const RatPoly& c) const;

  friend NFPoly operator+(const NFPoly& a, const NFPoly& b);
  friend NFPoly operator-(const NFPoly& a, const NFPoly& b);
  friend NFPoly operator*(const NFPoly& a, const NFPoly& b);

 private:
  void trim();
  const NumberFieldArith* field_ = nullptr;
  std::vector<RatPoly> coeffs_;
};

std::pair<NFPoly, NFPoly> divmod(const NFPoly& a, const NFPoly& b);
/// Monic gcd.
NFPoly gcd(const NFPoly& a, const NFPoly& b);

/// Norm to Q of g(x): Res_y(f(y), g(x, y)) where g's coefficients are read as
/// polynomials in y. Computed by evaluation at deg+1 points and interpolation.
RatPoly norm(const NFPoly& g);

}  // namespace algdyn
