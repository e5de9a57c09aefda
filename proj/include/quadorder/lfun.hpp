#pragma once

#include <cstdint>

#include "quadorder/arith.hpp"

namespace quadorder {

/// L(p^a, d) = |U(O_K/(p^a))| / phi(p^a).
std::int64_t l_prime_power(std::int64_t p, int a, std::int64_t d);

/// L(n, d), multiplicative in n with L(1, d) = 1.
std::int64_t l_value(std::int64_t n, std::int64_t d);
std::int64_t l_value(const Factorization& n, std::int64_t d);

}  // namespace quadorder
