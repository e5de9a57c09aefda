#include "quadorder/lfun.hpp"

#include <stdexcept>
#include <string>

namespace quadorder {

std::int64_t l_prime_power(std::int64_t p, int a, std::int64_t d)
{
    if (!is_prime(p))
        throw std::invalid_argument("l_prime_power: " + std::to_string(p) + " is not prime");
    if (a < 1)
        throw std::invalid_argument("l_prime_power: exponent must be positive");
    if (d == 0 || !is_squarefree(d))
        throw std::invalid_argument("l_prime_power: d must be squarefree");
    if (p == 2) {
        const std::int64_t half = ipow(2, a - 1);
        switch (residue(d, 8)) {
        case 1: return half;
        case 5: return 3 * half;
        default: return 2 * half;
        }
    }
    return ipow(p, a - 1) * (p - kronecker(d, p));
}

std::int64_t l_value(const Factorization& n, std::int64_t d)
{
    std::int64_t L = 1;
    for (const auto& [p, a] : n)
        L *= l_prime_power(p, a, d);
    return L;
}

std::int64_t l_value(std::int64_t n, std::int64_t d)
{
    if (d == 0 || !is_squarefree(d))
        throw std::invalid_argument("l_value: d must be squarefree");
    return l_value(factorize(n), d);
}

}  // namespace quadorder
