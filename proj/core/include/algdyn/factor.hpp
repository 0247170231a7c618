#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "algdyn/poly.hpp"

namespace algdyn {

/// Factorization over Q. Factors are integer-primitive with positive leading
/// coefficient, sorted by degree then coefficients (see poly_less); the
/// product of factor^multiplicity equals f up to a rational unit.
std::vector<std::pair<RatPoly, int>> factor_poly(const RatPoly& f, std::uint64_t seed = 0);

/// Irreducible factors of a squarefree polynomial, without multiplicities.
std::vector<RatPoly> factor_squarefree(const RatPoly& f, std::uint64_t seed = 0);

bool is_irreducible(const RatPoly& f, std::uint64_t seed = 0);

/// Integer coefficient vector of an integer-primitive polynomial.
std::vector<Int> integer_coeffs(const RatPoly& f);

}  // namespace algdyn
