#include "quadorder/quadfield.hpp"

#include <stdexcept>

namespace quadorder {

FieldContext make_field(std::int64_t d)
{
    if (d == 0 || d == 1)
        throw std::invalid_argument("make_field: d must not be 0 or 1");
    if (!is_squarefree(d))
        throw std::invalid_argument("make_field: d = " + std::to_string(d) + " is not squarefree");
    FieldContext F;
    F.d = d;
    if (residue(d, 4) == 1) {
        F.kind = OmegaKind::Half;
        F.disc = d;
    } else {
        F.kind = OmegaKind::Sqrt;
        F.disc = 4 * d;
    }
    return F;
}

ModQuadInt reduce(const BigQuadInt& x, std::uint64_t modulus)
{
    if (modulus == 0)
        throw std::invalid_argument("reduce: modulus must be positive");
    mpz_class m(static_cast<unsigned long>(modulus));
    mpz_class ra, rb;
    mpz_fdiv_r(ra.get_mpz_t(), x.a.get_mpz_t(), m.get_mpz_t());
    mpz_fdiv_r(rb.get_mpz_t(), x.b.get_mpz_t(), m.get_mpz_t());
    return {ra.get_ui(), rb.get_ui(), modulus};
}

ModQuadInt reduce(const SmallQuadInt& x, std::uint64_t modulus)
{
    if (modulus == 0)
        throw std::invalid_argument("reduce: modulus must be positive");
    return {residue(x.a, modulus), residue(x.b, modulus), modulus};
}

ModQuadInt mod_one(std::uint64_t modulus) { return {1 % modulus, 0, modulus}; }

ModQuadInt mod_mul(const FieldContext& F, const ModQuadInt& x, const ModQuadInt& y)
{
    if (x.modulus != y.modulus)
        throw std::invalid_argument("mod_mul: modulus mismatch");
    const std::uint64_t M = x.modulus;
    const std::uint64_t c0 = residue(F.c0(), M);
    const std::uint64_t c1 = residue(F.c1(), M);
    const std::uint64_t bb = mul_mod(x.b, y.b, M);
    const std::uint64_t a = (mul_mod(x.a, y.a, M) + mul_mod(bb, c0, M)) % M;
    const std::uint64_t b =
        ((mul_mod(x.a, y.b, M) + mul_mod(x.b, y.a, M)) % M + mul_mod(bb, c1, M)) % M;
    return {a, b, M};
}

std::uint64_t mod_norm(const FieldContext& F, const ModQuadInt& x)
{
    const std::uint64_t M = x.modulus;
    const std::uint64_t pos = (mul_mod(x.a, x.a, M) + mul_mod(mul_mod(residue(F.c1(), M), x.a, M), x.b, M)) % M;
    const std::uint64_t neg = mul_mod(mul_mod(residue(F.c0(), M), x.b, M), x.b, M);
    return (pos + M - neg) % M;
}

ModQuadInt mod_pow(const FieldContext& F, const ModQuadInt& x, std::uint64_t e)
{
    if (x.modulus < 2)
        throw std::invalid_argument("mod_pow: modulus must be at least 2");
    ModQuadInt r = mod_one(x.modulus);
    ModQuadInt base = x;
    while (e) {
        if (e & 1u)
            r = mod_mul(F, r, base);
        base = mod_mul(F, base, base);
        e >>= 1;
    }
    return r;
}

bool in_order(const BigQuadInt& x, std::int64_t n)
{
    if (n < 1)
        throw std::invalid_argument("in_order: index must be positive");
    return mpz_divisible_ui_p(x.b.get_mpz_t(), static_cast<unsigned long>(n)) != 0;
}

bool in_order(const SmallQuadInt& x, std::int64_t n)
{
    if (n < 1)
        throw std::invalid_argument("in_order: index must be positive");
    return x.b % n == 0;
}

bool in_order(const ModQuadInt& x, std::int64_t n)
{
    if (n < 1)
        throw std::invalid_argument("in_order: index must be positive");
    if (x.modulus % static_cast<std::uint64_t>(n) != 0)
        throw std::invalid_argument("in_order: index must divide the residue modulus");
    return x.b % static_cast<std::uint64_t>(n) == 0;
}

std::string to_string(SplitKind k)
{
    switch (k) {
    case SplitKind::Inert: return "inert";
    case SplitKind::Split: return "split";
    case SplitKind::Ramified: return "ramified";
    }
    return "?";
}

SplitKind split_kind(const FieldContext& F, std::int64_t p)
{
    if (p == 2) {
        const auto r8 = residue(F.d, 8);
        return r8 == 5 ? SplitKind::Inert : r8 == 1 ? SplitKind::Split : SplitKind::Ramified;
    }
    const int k = kronecker(F.d, p);  // rejects composite p
    return k < 0 ? SplitKind::Inert : k > 0 ? SplitKind::Split : SplitKind::Ramified;
}

SplittingReport splitting_type(const FieldContext& F, std::int64_t p)
{
    if (!is_prime(p))
        throw std::invalid_argument("splitting_type: " + std::to_string(p) + " is not prime");
    SplittingReport rep;
    rep.p = p;
    rep.kind = split_kind(F, p);
    if (rep.kind == SplitKind::Inert)
        return rep;
    // roots of x^2 - c1*x - c0 mod p
    const auto up = static_cast<std::uint64_t>(p);
    const std::uint64_t c0 = residue(F.c0(), up);
    const std::uint64_t c1 = residue(F.c1(), up);
    for (std::uint64_t r = 0; r < up; ++r) {
        const std::uint64_t lhs = mul_mod(r, r, up);
        const std::uint64_t rhs = (mul_mod(c1, r, up) + c0) % up;
        if (lhs == rhs)
            rep.roots.push_back(static_cast<std::int64_t>(r));
    }
    const std::size_t expected = rep.kind == SplitKind::Split ? 2 : 1;
    if (rep.roots.size() != expected)
        throw InternalError("splitting_type: root count disagrees with splitting kind for d = "
                            + std::to_string(F.d) + ", p = " + std::to_string(p));
    return rep;
}

}  // namespace quadorder
