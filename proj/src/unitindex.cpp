#include "quadorder/unitindex.hpp"

#include <numeric>
#include <string>

#include "quadorder/lfun.hpp"

namespace quadorder {

std::int64_t min_power_prime_power(const FieldContext& F, const FundamentalUnit& U,
                                   std::int64_t p, int a)
{
    const std::int64_t q = ipow(p, a);
    if (q < 2)
        throw std::invalid_argument("min_power_prime_power: p^a must be at least 2");
    const ModQuadInt u = reduce(U.u, static_cast<std::uint64_t>(q));
    const std::int64_t L = l_prime_power(p, a, F.d);
    for (std::int64_t k : divisors_sorted(L)) {
        if (mod_pow(F, u, static_cast<std::uint64_t>(k)).b == 0)
            return k;
    }
    throw InternalError("min_power_prime_power: no divisor of L(" + std::to_string(q) + ", "
                        + std::to_string(F.d) + ") = " + std::to_string(L)
                        + " brings the unit into the order");
}

std::int64_t min_power(const FieldContext& F, const FundamentalUnit& U, std::int64_t n)
{
    std::int64_t m = 1;
    for (const auto& [p, a] : factorize(n))
        m = std::lcm(m, min_power_prime_power(F, U, p, a));
    return m;
}

}  // namespace quadorder
