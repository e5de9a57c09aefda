#include "quadorder/arith.hpp"

#include <algorithm>
#include <string>

namespace quadorder {

std::int64_t PrimePower::value() const { return ipow(p, a); }

Factorization factorize(std::int64_t n)
{
    if (n < 1)
        throw std::invalid_argument("factorize: n must be positive, got " + std::to_string(n));
    Factorization out;
    auto strip = [&](std::int64_t p) {
        if (n % p != 0)
            return;
        int a = 0;
        while (n % p == 0) {
            n /= p;
            ++a;
        }
        out.push_back({p, a});
    };
    strip(2);
    strip(3);
    strip(5);
    // wheel mod 30
    static constexpr int gaps[8] = {4, 2, 4, 2, 4, 6, 2, 6};
    std::int64_t p = 7;
    for (int i = 0; p * p <= n; p += gaps[i], i = (i + 1) % 8)
        strip(p);
    if (n > 1)
        out.push_back({n, 1});
    return out;
}

std::int64_t recompose(const Factorization& f)
{
    std::int64_t r = 1;
    for (const auto& pp : f)
        r *= pp.value();
    return r;
}

bool is_prime(std::int64_t n)
{
    if (n < 2)
        return false;
    auto f = factorize(n);
    return f.size() == 1 && f[0].a == 1;
}

bool is_squarefree(std::int64_t d)
{
    if (d == 0)
        throw std::invalid_argument("is_squarefree: d must be nonzero");
    std::int64_t m = d < 0 ? -d : d;
    for (const auto& pp : factorize(m))
        if (pp.a > 1)
            return false;
    return true;
}

std::uint64_t mul_mod(std::uint64_t x, std::uint64_t y, std::uint64_t m)
{
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(x) * y % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint64_t m)
{
    std::uint64_t r = 1 % m;
    base %= m;
    while (e) {
        if (e & 1)
            r = mul_mod(r, base, m);
        base = mul_mod(base, base, m);
        e >>= 1;
    }
    return r;
}

std::uint64_t residue(std::int64_t x, std::uint64_t m)
{
    auto mm = static_cast<std::int64_t>(m);
    std::int64_t r = x % mm;
    return static_cast<std::uint64_t>(r < 0 ? r + mm : r);
}

int kronecker(std::int64_t d, std::int64_t p)
{
    if (p == 2 || !is_prime(p))
        throw std::invalid_argument("kronecker: lower argument must be an odd prime, got "
                                    + std::to_string(p));
    auto up = static_cast<std::uint64_t>(p);
    std::uint64_t r = residue(d, up);
    if (r == 0)
        return 0;
    return pow_mod(r, (up - 1) / 2, up) == 1 ? 1 : -1;
}

std::vector<std::int64_t> divisors_sorted(std::int64_t n)
{
    if (n < 1)
        throw std::invalid_argument("divisors_sorted: n must be positive");
    std::vector<std::int64_t> divs{1};
    for (const auto& [p, a] : factorize(n)) {
        const std::size_t base = divs.size();
        std::int64_t pk = 1;
        for (int k = 1; k <= a; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i)
                divs.push_back(divs[i] * pk);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

std::int64_t euler_phi(const Factorization& f)
{
    std::int64_t phi = 1;
    for (const auto& [p, a] : f)
        phi *= ipow(p, a - 1) * (p - 1);
    return phi;
}

std::int64_t ipow(std::int64_t base, int e)
{
    std::int64_t r = 1;
    for (int i = 0; i < e; ++i)
        r *= base;
    return r;
}

std::int64_t isqrt(std::int64_t n)
{
    if (n < 0)
        throw std::invalid_argument("isqrt: negative argument");
    std::int64_t r = static_cast<std::int64_t>(__builtin_sqrtl(static_cast<long double>(n)));
    while (r * r > n)
        --r;
    while ((r + 1) * (r + 1) <= n)
        ++r;
    return r;
}

}  // namespace quadorder
