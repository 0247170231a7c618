#pragma once

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "algdyn/rat.hpp"

namespace algdyn {

/// Univariate polynomial over Q, coefficients in ascending degree.
/// The coefficient vector never carries trailing zeros, so the zero
/// polynomial has an empty vector and degree -1.
class RatPoly {
 public:
  RatPoly() = default;
  explicit RatPoly(std::vector<Rat> coeffs);
  RatPoly(std::initializer_list<Rat> coeffs);

  static RatPoly constant(const Rat& c);
  static RatPoly monomial(const Rat& c, int degree);
  static RatPoly x() { return monomial(Rat(1), 1); }
  static RatPoly from_ints(const std::vector<long>& coeffs);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  const std::vector<Rat>& coeffs() const { return coeffs_; }
  Rat coeff(int i) const;
  const Rat& leading() const;

  Rat operator()(const Rat& x) const;
  RatPoly derivative() const;
  RatPoly monic() const;
  RatPoly compose(const RatPoly& inner) const;
  RatPoly pow(unsigned exponent) const;
  /// Replaces x by -x.
  RatPoly reflect() const;

  /// Integer-primitive form with positive leading coefficient; `unit` receives
  /// the rational factor so that *this == unit * result.
  RatPoly primitive(Rat* unit = nullptr) const;
  bool has_integer_coeffs() const;

  RatPoly& operator+=(const RatPoly& o);
  RatPoly& operator-=(const RatPoly& o);
  RatPoly& operator*=(const RatPoly& o);
  RatPoly& operator*=(const Rat& c);

  friend RatPoly operator+(RatPoly a, const RatPoly& b) { return a += b; }
  friend RatPoly operator-(RatPoly a, const RatPoly& b) { return a -= b; }
  friend RatPoly operator*(RatPoly a, const RatPoly& b) { return a *= b; }
  friend RatPoly operator*(RatPoly a, const Rat& c) { return a *= c; }
  friend RatPoly operator*(const Rat& c, RatPoly a) { return a *= c; }
  RatPoly operator-() const;

  friend bool operator==(const RatPoly& a, const RatPoly& b) { return a.coeffs_ == b.coeffs_; }

  /// Human-readable form, e.g. "x^2 - 5*x + 6".
  std::string str(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Rat> coeffs_;
};

/// Deterministic total order: degree first, then coefficients from the top.
bool poly_less(const RatPoly& a, const RatPoly& b);

std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b);
RatPoly operator/(const RatPoly& a, const RatPoly& b);
RatPoly operator%(const RatPoly& a, const RatPoly& b);

/// Monic gcd; gcd(0, 0) = 0.
RatPoly gcd(const RatPoly& a, const RatPoly& b);

struct ExtGcd {
  RatPoly g, s, t;  // s*a + t*b = g, g monic
};
ExtGcd ext_gcd(const RatPoly& a, const RatPoly& b);

/// Inverse of a modulo m; throws DomainError when gcd(a, m) != 1.
RatPoly inverse_mod(const RatPoly& a, const RatPoly& m);
RatPoly powmod(const RatPoly& base, long exponent, const RatPoly& m);

/// Yun's algorithm: monic squarefree factors with their multiplicities.
std::vector<std::pair<RatPoly, int>> squarefree_decomposition(const RatPoly& f);
RatPoly squarefree_part(const RatPoly& f);

/// lc(f)^deg(g) * prod g(roots of f).
Rat resultant(const RatPoly& f, const RatPoly& g);

/// Lagrange interpolation through (xs[i], ys[i]); the xs must be distinct.
RatPoly interpolate(const std::vector<Rat>& xs, const std::vector<Rat>& ys);

/// Monic cyclotomic polynomial of order n >= 1.
RatPoly cyclotomic(unsigned n);
unsigned long euler_phi(unsigned long n);

/// Number of distinct real roots of f in the half-open interval (a, b].
int count_real_roots(const RatPoly& f, const Rat& a, const Rat& b);
/// Number of distinct real roots of f.
int count_real_roots(const RatPoly& f);
/// Cauchy bound: every complex root has modulus below the returned value.
Rat root_bound(const RatPoly& f);

}  // namespace algdyn
