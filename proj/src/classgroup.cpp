#include "quadorder/classgroup.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

namespace quadorder {

namespace {

std::int64_t gcd3(std::int64_t a, std::int64_t b, std::int64_t c)
{
    return std::gcd(std::gcd(a, b), c);
}

}  // namespace

std::vector<Form> reduced_definite_forms(std::int64_t D)
{
    if (D >= 0 || residue(D, 4) > 1)
        throw std::invalid_argument("reduced_definite_forms: bad discriminant " + std::to_string(D));
    std::vector<Form> out;
    const std::int64_t N = -D;
    // |b| <= a <= c forces 3a^2 <= |D|
    for (std::int64_t a = 1; 3 * a * a <= N; ++a) {
        for (std::int64_t b = -a + 1; b <= a; ++b) {
            const std::int64_t num = b * b - D;
            if (num % (4 * a) != 0)
                continue;
            const std::int64_t c = num / (4 * a);
            if (c < a || (c == a && b < 0))
                continue;
            if (gcd3(a, b, c) != 1)
                continue;
            out.push_back({a, b, c});
        }
    }
    return out;
}

std::vector<Form> reduced_indefinite_forms(std::int64_t D)
{
    if (D <= 0 || residue(D, 4) > 1)
        throw std::invalid_argument("reduced_indefinite_forms: bad discriminant " + std::to_string(D));
    std::vector<Form> out;
    for (std::int64_t b = 1; b * b < D; ++b) {
        if ((b - D) % 2 != 0)
            continue;
        const std::int64_t ac = (D - b * b) / 4;  // = -a*c
        for (std::int64_t aa = 1; aa <= ac; ++aa) {
            if (ac % aa != 0)
                continue;
            // sqrt(D) - b < 2|a|  and  2|a| < sqrt(D) + b
            const std::int64_t lo = 2 * aa + b;
            const std::int64_t hi = 2 * aa - b;
            if (lo * lo <= D)
                continue;
            if (hi > 0 && hi * hi >= D)
                continue;
            const std::int64_t cc = ac / aa;
            for (std::int64_t s : {1, -1}) {
                const Form f{s * aa, b, -s * cc};
                if (gcd3(f.a, f.b, f.c) == 1)
                    out.push_back(f);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

Form rho(const Form& f, std::int64_t D)
{
    const std::int64_t s = isqrt(D);
    const std::int64_t two_c = 2 * (f.c < 0 ? -f.c : f.c);
    // b' = -b mod 2|c| with sqrt(D) - 2|c| < b' < sqrt(D)
    const std::int64_t shift = ((s + f.b) % two_c + two_c) % two_c;
    const std::int64_t nb = s - shift;
    const std::int64_t num = nb * nb - D;
    if (num % (4 * f.c) != 0)
        throw InternalError("rho: non-integral form");
    return {f.c, nb, num / (4 * f.c)};
}

std::int64_t count_form_cycles(std::int64_t D)
{
    const auto forms = reduced_indefinite_forms(D);
    std::map<Form, bool> seen;
    for (const auto& f : forms)
        seen[f] = false;
    std::int64_t cycles = 0;
    for (const auto& f : forms) {
        if (seen[f])
            continue;
        ++cycles;
        Form g = f;
        do {
            auto it = seen.find(g);
            if (it == seen.end())
                throw InternalError("rho left the set of reduced forms for D = " + std::to_string(D));
            it->second = true;
            g = rho(g, D);
        } while (!(g == f));
    }
    return cycles;
}

FormClassData class_number(const FieldContext& F, const FundamentalUnit& U)
{
    FormClassData C;
    C.disc = F.disc;
    C.unit_norm_sign = U.norm_sign;
    if (F.disc < 0) {
        C.h = static_cast<std::int64_t>(reduced_definite_forms(F.disc).size());
        return C;
    }
    C.h_plus = count_form_cycles(F.disc);
    if (U.norm_sign < 0) {
        C.h = C.h_plus;
    } else {
        if (C.h_plus % 2 != 0)
            throw InternalError("class_number: odd narrow class number with a norm +1 unit, D = "
                                + std::to_string(F.disc));
        C.h = C.h_plus / 2;
    }
    return C;
}

}  // namespace quadorder
