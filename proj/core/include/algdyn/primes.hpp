#pragma once

#include <vector>

#include "algdyn/rat.hpp"

namespace algdyn {

bool is_prime(const Int& n);

/// Distinct prime divisors of |n|, ascending. n must be nonzero.
std::vector<Int> prime_divisors(const Int& n);

}  // namespace algdyn
