#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace algdyn {

using Int = mpz_class;
/// Exact rational. GMP keeps every value canonical (gcd 1, positive
/// denominator) after each arithmetic operation.
using Rat = mpq_class;

using IntVec = std::vector<std::int64_t>;
using RatVec = std::vector<Rat>;

/// "p/q", or "n" when the denominator is one.
std::string to_string(const Rat& q);
std::string to_string(const Int& z);

/// Accepts "n", "p/q", optionally signed; whitespace is not allowed.
Rat parse_rat(std::string_view text);

inline int sign(const Rat& q) { return sgn(q); }
inline int sign(const Int& z) { return sgn(z); }

/// p-adic valuation. Zero has no valuation; callers check first.
long valuation(const Int& z, const Int& p);
long valuation(const Rat& q, const Int& p);

Rat pow(const Rat& base, long exponent);
Int pow(const Int& base, unsigned long exponent);

Int lcm(const Int& a, const Int& b);
Int gcd(const Int& a, const Int& b);

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

}  // namespace algdyn
