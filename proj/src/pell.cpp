#include "quadorder/pell.hpp"

#include <stdexcept>

namespace quadorder {

namespace {

bool is_square(const mpz_class& v) { return v >= 0 && mpz_perfect_square_p(v.get_mpz_t()) != 0; }

// Ascending-y scan; only used where the convergent argument does not apply.
PellSolution scan_pell_pm4(std::int64_t D)
{
    for (std::int64_t y = 1;; ++y) {
        mpz_class dy2 = mpz_class(D) * y * y;
        for (int s : {-4, 4}) {
            mpz_class t = dy2 + s;
            if (is_square(t))
                return {sqrt(t), mpz_class(y)};
        }
    }
}

}  // namespace

PellSolution solve_pell_pm4(std::int64_t D)
{
    if (D <= 0)
        throw std::invalid_argument("solve_pell_pm4: D must be positive");
    const std::int64_t a0 = isqrt(D);
    if (a0 * a0 == D)
        throw std::invalid_argument("solve_pell_pm4: D must not be a square");
    // Every coprime solution with |x^2 - D y^2| < sqrt(D) is a convergent of
    // sqrt(D). For D <= 16 the bound 4 < sqrt(D) fails, so scan instead.
    if (D <= 16)
        return scan_pell_pm4(D);

    // h_k^2 - D k_k^2 = (-1)^(k+1) q_{k+1}, with (m, q, a) the usual
    // complete-quotient recurrence.
    std::int64_t m = 0, q = 1, a = a0;
    mpz_class h_prev = 1, h = a0;
    mpz_class k_prev = 0, k = 1;
    bool have = false;
    PellSolution best;
    for (;;) {
        m = q * a - m;
        q = (D - m * m) / q;
        a = (a0 + m) / q;
        // q is |h^2 - D k^2| for the current convergent h/k.
        if (q == 4) {
            if (!have || k < best.y) {
                best = {h, k};
                have = true;
            }
        } else if (q == 1) {
            mpz_class y2 = 2 * k;
            if (!have || y2 < best.y) {
                best = {2 * h, y2};
                have = true;
            }
        }
        if (have && k >= best.y)
            return best;
        mpz_class hn = a * h + h_prev;
        mpz_class kn = a * k + k_prev;
        h_prev = h;
        k_prev = k;
        h = hn;
        k = kn;
    }
}

FundamentalUnit fundamental_unit(const FieldContext& F)
{
    FundamentalUnit U;
    if (F.d < 0) {
        if (F.d == -1) {
            U.u = {0, 1};
            U.torsion_order = 4;
        } else if (F.d == -3) {
            U.u = {0, 1};  // (1 + sqrt(-3)) / 2, a primitive sixth root of unity
            U.torsion_order = 6;
        } else {
            U.u = {-1, 0};
            U.torsion_order = 2;
        }
        U.norm_sign = 1;
        return U;
    }
    const PellSolution s = solve_pell_pm4(F.disc);
    if (F.kind == OmegaKind::Sqrt)
        U.u = {s.x / 2, s.y};
    else
        U.u = {(s.x - s.y) / 2, s.y};
    const mpz_class N = qi_norm(F, U.u);
    if (N != 1 && N != -1)
        throw InternalError("fundamental_unit: solver produced a non-unit for d = " + std::to_string(F.d));
    U.norm_sign = N > 0 ? 1 : -1;
    U.torsion_order = 2;
    return U;
}

PellSolution to_pell_coordinates(const FieldContext& F, const BigQuadInt& u)
{
    if (F.kind == OmegaKind::Sqrt)
        return {2 * u.a, u.b};
    return {2 * u.a + u.b, u.b};
}

bool verify_unit(const FieldContext& F, const FundamentalUnit& U, std::int64_t rescan_limit)
{
    const mpz_class N = qi_norm(F, U.u);
    if (N != 1 && N != -1)
        return false;
    if (N != U.norm_sign)
        return false;
    if (F.d < 0) {
        // u must have exact multiplicative order torsion_order
        BigQuadInt p{1, 0};
        for (int k = 1; k <= U.torsion_order; ++k) {
            p = qi_mul(F, p, U.u);
            const bool one = p == BigQuadInt{1, 0};
            if (one != (k == U.torsion_order))
                return false;
        }
        return true;
    }
    const PellSolution s = to_pell_coordinates(F, U.u);
    if (s.x <= 0 || s.y <= 0)
        return false;
    if (s.y <= rescan_limit) {
        const std::int64_t y = s.y.get_si();
        for (std::int64_t t = 1; t < y; ++t) {
            mpz_class dy2 = mpz_class(F.disc) * t * t;
            if (is_square(dy2 - 4) || is_square(dy2 + 4))
                return false;
        }
        // same y, smaller x: only possible when u has norm +1
        if (N > 0 && is_square(mpz_class(F.disc) * y * y - 4))
            return false;
        return true;
    }
    const PellSolution ref = solve_pell_pm4(F.disc);
    return ref.x == s.x && ref.y == s.y;
}

}  // namespace quadorder
