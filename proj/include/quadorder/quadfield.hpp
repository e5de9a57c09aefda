#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "quadorder/arith.hpp"

namespace quadorder {

enum class OmegaKind {
    Sqrt,  ///< omega = sqrt(d), d = 2,3 mod 4
    Half,  ///< omega = (1 + sqrt(d)) / 2, d = 1 mod 4
};

/// Q(sqrt d) together with the integral basis (1, omega).
///
/// Multiplication only needs omega^2 = c1 * omega + c0, so both kinds share
/// one code path: Sqrt has (c1, c0) = (0, d), Half has (1, (d - 1) / 4).
struct FieldContext {
    std::int64_t d = 0;
    OmegaKind kind = OmegaKind::Sqrt;
    std::int64_t disc = 0;  ///< fundamental discriminant D

    std::int64_t c1() const { return kind == OmegaKind::Half ? 1 : 0; }
    std::int64_t c0() const { return kind == OmegaKind::Half ? (d - 1) / 4 : d; }
    bool real() const { return d > 0; }
};

FieldContext make_field(std::int64_t d);

/// a + b*omega with coordinates of type Scalar (mpz_class or a builtin integer).
template <class Scalar>
struct QuadInt {
    Scalar a{0};
    Scalar b{0};

    bool operator==(const QuadInt&) const = default;
};

using BigQuadInt = QuadInt<mpz_class>;
using SmallQuadInt = QuadInt<std::int64_t>;

template <class Scalar>
QuadInt<Scalar> qi_mul(const FieldContext& F, const QuadInt<Scalar>& x, const QuadInt<Scalar>& y)
{
    const Scalar c0 = Scalar(F.c0());
    const Scalar c1 = Scalar(F.c1());
    Scalar bb = x.b * y.b;
    return {x.a * y.a + bb * c0, x.a * y.b + x.b * y.a + bb * c1};
}

template <class Scalar>
Scalar qi_norm(const FieldContext& F, const QuadInt<Scalar>& x)
{
    return x.a * x.a + Scalar(F.c1()) * x.a * x.b - Scalar(F.c0()) * x.b * x.b;
}

template <class Scalar>
QuadInt<Scalar> qi_conj(const FieldContext& F, const QuadInt<Scalar>& x)
{
    return {x.a + Scalar(F.c1()) * x.b, -x.b};
}

template <class Scalar>
QuadInt<Scalar> qi_pow(const FieldContext& F, QuadInt<Scalar> x, unsigned e)
{
    QuadInt<Scalar> r{Scalar(1), Scalar(0)};
    while (e) {
        if (e & 1u)
            r = qi_mul(F, r, x);
        x = qi_mul(F, x, x);
        e >>= 1;
    }
    return r;
}

/// Residue of a quadratic integer in O_K / (modulus).
struct ModQuadInt {
    std::uint64_t a = 0;
    std::uint64_t b = 0;
    std::uint64_t modulus = 1;

    bool operator==(const ModQuadInt&) const = default;
};

ModQuadInt reduce(const BigQuadInt& x, std::uint64_t modulus);
ModQuadInt reduce(const SmallQuadInt& x, std::uint64_t modulus);
ModQuadInt mod_one(std::uint64_t modulus);

ModQuadInt mod_mul(const FieldContext& F, const ModQuadInt& x, const ModQuadInt& y);
std::uint64_t mod_norm(const FieldContext& F, const ModQuadInt& x);

/// x^e in O_K / (x.modulus) by square-and-multiply. Requires modulus >= 2.
ModQuadInt mod_pow(const FieldContext& F, const ModQuadInt& x, std::uint64_t e);

/// Membership in the index-n order Z + n*O_K: n divides the omega coordinate.
bool in_order(const BigQuadInt& x, std::int64_t n);
bool in_order(const SmallQuadInt& x, std::int64_t n);
/// Residue version; requires n | x.modulus so the test is well defined.
bool in_order(const ModQuadInt& x, std::int64_t n);

enum class SplitKind { Inert, Split, Ramified };

std::string to_string(SplitKind k);

struct SplittingReport {
    std::int64_t p = 0;
    SplitKind kind = SplitKind::Inert;
    /// Residues r with omega = r mod the prime (p, omega - r). Empty when inert.
    std::vector<std::int64_t> roots;
};

/// Splitting kind alone (no root search): d mod 8 for p = 2, Legendre symbol otherwise.
SplitKind split_kind(const FieldContext& F, std::int64_t p);

SplittingReport splitting_type(const FieldContext& F, std::int64_t p);

}  // namespace quadorder
