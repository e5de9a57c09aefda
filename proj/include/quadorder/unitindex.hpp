#pragma once

#include <cstdint>

#include "quadorder/pell.hpp"

namespace quadorder {

/// Smallest k with u^k in Z + p^a O_K. Only divisors of L(p^a, d) are tried,
/// since the unit index always divides L. Throws InternalError if none works.
std::int64_t min_power_prime_power(const FieldContext& F, const FundamentalUnit& U,
                                   std::int64_t p, int a);

/// Smallest m >= 1 with u^m in Z + n O_K, i.e. |U(O_K) / U(R)|.
std::int64_t min_power(const FieldContext& F, const FundamentalUnit& U, std::int64_t n);

}  // namespace quadorder
