#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace quadorder {

/// One prime-power factor p^a.
struct PrimePower {
    std::int64_t p;
    int a;

    std::int64_t value() const;
    bool operator==(const PrimePower&) const = default;
};

/// Prime factorization sorted by ascending prime; empty for 1.
using Factorization = std::vector<PrimePower>;

// Raised when an internal arithmetic invariant is violated. Never expected;
// indicates a bug rather than bad input.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

Factorization factorize(std::int64_t n);
std::int64_t recompose(const Factorization& f);

bool is_prime(std::int64_t n);
bool is_squarefree(std::int64_t d);

/// Legendre symbol (d/p) for an odd prime p, via Euler's criterion.
int kronecker(std::int64_t d, std::int64_t p);

std::vector<std::int64_t> divisors_sorted(std::int64_t n);

std::int64_t euler_phi(const Factorization& f);

std::uint64_t mul_mod(std::uint64_t x, std::uint64_t y, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint64_t m);

/// Least nonnegative residue of x modulo m (m > 0).
std::uint64_t residue(std::int64_t x, std::uint64_t m);

std::int64_t ipow(std::int64_t base, int e);
std::int64_t isqrt(std::int64_t n);

}  // namespace quadorder
