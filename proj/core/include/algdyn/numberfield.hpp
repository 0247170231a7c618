#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "algdyn/qmatrix.hpp"

namespace algdyn {

/// An A-irreducible block realized as multiplication on K = Q(theta):
/// generator j acts as multiplication by zeta_j = g_j(theta).
struct NumberFieldAction {
  /// Monic irreducible minimal polynomial of theta.
  RatPoly f;
  /// g_j, each of degree < deg f.
  std::vector<RatPoly> multipliers;
  /// Columns are the block images of 1, theta, ..., theta^{k-1}; so
  /// basis_map^{-1} B_j basis_map is multiplication by g_j(theta).
  QMatrix basis_map;

  std::size_t degree() const { return static_cast<std::size_t>(f.degree()); }
  std::size_t rank() const { return multipliers.size(); }
};

struct FieldElement {
  RatPoly field;  // monic irreducible modulus
  RatPoly value;  // reduced representative
};

/// Multiplication by a on the power basis of Q[x]/(f).
QMatrix multiplication_matrix(const RatPoly& a, const RatPoly& f);

/// Number-field data for a block of commuting matrices acting irreducibly.
/// Throws DomainError when the block is not irreducible.
NumberFieldAction diagonalize_block(const std::vector<QMatrix>& block, std::uint64_t seed = 0);
/// Wraps given field data (f monic irreducible) with the identity basis map.
NumberFieldAction make_number_field_action(RatPoly f, std::vector<RatPoly> multipliers);

/// zeta_n = prod zeta_j^{n_j} as a reduced polynomial in theta.
RatPoly element(const NumberFieldAction& nf, const IntVec& n);
/// Characteristic polynomial over Q of multiplication by zeta_n on K.
RatPoly element_charpoly(const NumberFieldAction& nf, const IntVec& n);
/// Minimal polynomial over Q of a field element.
RatPoly element_minpoly(const FieldElement& e);

/// Multiplicative order when e is a root of unity.
std::optional<unsigned long> is_root_of_unity(const FieldElement& e);

/// Images of theta_1 (a root of f1) inside Q[x]/(f2), i.e. all Q-embeddings.
std::vector<FieldElement> embeddings_between(const RatPoly& f1, const RatPoly& f2, std::uint64_t seed = 0);

/// Irreducible monic factors of g over Q[y]/(f) (Trager); coefficients are
/// field elements as polynomials in y.
struct NFFactor {
  std::vector<RatPoly> coeffs;
};
std::vector<NFFactor> factor_over_field(const RatPoly& g, const RatPoly& f, std::uint64_t seed = 0);

/// One factor Q[t]/(F) of K1 (x) K2, with theta1 = a(t) and theta2 = b(t).
struct CompositumComponent {
  RatPoly field;
  RatPoly theta1;
  RatPoly theta2;
};
std::vector<CompositumComponent> compositum(const RatPoly& f1, const RatPoly& f2, std::uint64_t seed = 0);

/// Image of a polynomial expression in theta under theta -> image, reduced modulo `modulus`.
RatPoly substitute(const RatPoly& expr, const RatPoly& image, const RatPoly& modulus);

}  // namespace algdyn
