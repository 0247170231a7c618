#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "algdyn/rat.hpp"

namespace algdyn::detail {

/// Dense polynomial over F_p, ascending coefficients, no trailing zeros.
/// p must be an odd prime below 2^32.
using ModPoly = std::vector<std::uint64_t>;

class Fp {
 public:
  explicit Fp(std::uint64_t p) : p_(p) {}
  std::uint64_t p() const { return p_; }

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const { return (a + b) % p_; }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return (a + p_ - b) % p_; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return a * b % p_; }
  std::uint64_t inv(std::uint64_t a) const;
  std::uint64_t reduce(const Int& z) const;

  static void trim(ModPoly& a);
  ModPoly add(const ModPoly& a, const ModPoly& b) const;
  ModPoly sub(const ModPoly& a, const ModPoly& b) const;
  ModPoly mul(const ModPoly& a, const ModPoly& b) const;
  ModPoly scale(const ModPoly& a, std::uint64_t c) const;
  void divmod(const ModPoly& a, const ModPoly& b, ModPoly& q, ModPoly& r) const;
  ModPoly rem(const ModPoly& a, const ModPoly& b) const;
  ModPoly quo(const ModPoly& a, const ModPoly& b) const;
  ModPoly monic(const ModPoly& a) const;
  ModPoly gcd(const ModPoly& a, const ModPoly& b) const;
  /// s*a + t*b = gcd (monic).
  ModPoly ext_gcd(const ModPoly& a, const ModPoly& b, ModPoly& s, ModPoly& t) const;
  ModPoly derivative(const ModPoly& a) const;
  ModPoly powmod(const ModPoly& base, const Int& e, const ModPoly& m) const;

  /// Reduction of an integer polynomial (given by integer coefficients).
  ModPoly from_ints(const std::vector<Int>& coeffs) const;

  /// Distinct-degree factorization of a monic squarefree polynomial:
  /// pairs (product of all irreducible factors of degree d, d).
  std::vector<std::pair<ModPoly, int>> distinct_degree(const ModPoly& f) const;
  /// Splits a monic squarefree product of irreducibles of degree d.
  std::vector<ModPoly> equal_degree(const ModPoly& f, int d, std::mt19937_64& rng) const;
  /// Complete factorization of a monic squarefree polynomial into monic irreducibles.
  std::vector<ModPoly> factor_squarefree(const ModPoly& f, std::mt19937_64& rng) const;

 private:
  std::uint64_t p_;
};

}  // namespace algdyn::detail
