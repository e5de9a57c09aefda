#include "quadorder/oracle.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace quadorder {

namespace {

void check_bound(std::int64_t M, std::int64_t bound, const char* who)
{
    if (M < 1)
        throw std::invalid_argument(std::string(who) + ": modulus must be positive");
    if (M > bound)
        throw std::out_of_range(std::string(who) + ": modulus " + std::to_string(M)
                                + " exceeds the enumeration bound " + std::to_string(bound));
}

// Residues of Z + n O_K modulo M: any first coordinate, second coordinate a
// multiple of gcd(n, M).
template <class Fn>
bool any_order_residue(std::int64_t n, std::uint64_t M, Fn&& fn)
{
    const auto step = static_cast<std::uint64_t>(std::gcd(n, static_cast<std::int64_t>(M)));
    for (std::uint64_t a = 0; a < M; ++a)
        for (std::uint64_t b = 0; b < M; b += step)
            if (fn(ModQuadInt{a, b, M}))
                return true;
    return false;
}

// The cyclic group generated by u in O/(n), starting from 1.
std::vector<ModQuadInt> unit_cycle(const FieldContext& F, const FundamentalUnit& U, std::uint64_t n)
{
    const ModQuadInt u = reduce(U.u, n);
    const ModQuadInt one = mod_one(n);
    std::vector<ModQuadInt> out{one};
    for (ModQuadInt x = mod_mul(F, one, u); !(x == one); x = mod_mul(F, x, u)) {
        out.push_back(x);
        if (out.size() > n * n)
            throw InternalError("unit_cycle: unit does not have finite order in O/(n)");
    }
    return out;
}

}  // namespace

IdealResidues::IdealResidues(const FieldContext& F, const std::vector<SmallQuadInt>& gens,
                             std::uint64_t M)
    : M_(M), bits_(M * M, false)
{
    std::vector<ModQuadInt> steps;
    const ModQuadInt omega{0, 1 % M, M};
    for (const auto& g : gens) {
        const ModQuadInt r = reduce(g, M);
        steps.push_back(r);
        steps.push_back(mod_mul(F, r, omega));
    }
    // additive closure from 0
    std::vector<std::uint64_t> stack{0};
    bits_[0] = true;
    while (!stack.empty()) {
        const std::uint64_t idx = stack.back();
        stack.pop_back();
        const std::uint64_t a = idx / M, b = idx % M;
        for (const auto& s : steps) {
            const std::uint64_t na = (a + s.a) % M, nb = (b + s.b) % M;
            const std::uint64_t j = na * M + nb;
            if (!bits_[j]) {
                bits_[j] = true;
                stack.push_back(j);
            }
        }
    }
}

std::uint64_t IdealResidues::size() const
{
    std::uint64_t c = 0;
    for (bool b : bits_)
        c += b;
    return c;
}

std::vector<std::vector<SmallQuadInt>> primes_above(const FieldContext& F, std::int64_t p)
{
    const SplittingReport rep = splitting_type(F, p);
    std::vector<std::vector<SmallQuadInt>> out;
    if (rep.kind == SplitKind::Inert) {
        out.push_back({SmallQuadInt{p, 0}});
        return out;
    }
    for (std::int64_t r : rep.roots)
        out.push_back({SmallQuadInt{p, 0}, SmallQuadInt{-r, 1}});
    return out;
}

std::vector<SmallQuadInt> ideal_product(const FieldContext& F, const std::vector<SmallQuadInt>& x,
                                        const std::vector<SmallQuadInt>& y)
{
    std::vector<SmallQuadInt> out;
    for (const auto& g : x)
        for (const auto& h : y)
            out.push_back(qi_mul(F, g, h));
    return out;
}

std::int64_t quotient_unit_count(const FieldContext& F, std::int64_t M, std::int64_t bound)
{
    check_bound(M, bound, "quotient_unit_count");
    if (M < 2)
        throw std::invalid_argument("quotient_unit_count: modulus must be at least 2");
    const auto uM = static_cast<std::uint64_t>(M);
    std::int64_t count = 0;
    for (std::uint64_t a = 0; a < uM; ++a)
        for (std::uint64_t b = 0; b < uM; ++b)
            if (std::gcd(mod_norm(F, ModQuadInt{a, b, uM}), uM) == 1)
                ++count;
    return count;
}

bool brute_locally_associated(const FieldContext& F, const FundamentalUnit& U, std::int64_t n,
                              std::int64_t bound)
{
    check_bound(n, bound, "brute_locally_associated");
    if (n == 1)
        return true;
    const auto un = static_cast<std::uint64_t>(n);
    std::vector<bool> reached(un * un, false);
    for (const ModQuadInt& x : unit_cycle(F, U, un))
        for (std::uint64_t z = 1; z < un; ++z)
            if (std::gcd(z, un) == 1) {
                const ModQuadInt y = mod_mul(F, ModQuadInt{z, 0, un}, x);
                reached[y.a * un + y.b] = true;
            }
    for (std::uint64_t a = 0; a < un; ++a)
        for (std::uint64_t b = 0; b < un; ++b) {
            const bool unit = std::gcd(mod_norm(F, ModQuadInt{a, b, un}), un) == 1;
            if (unit && !reached[a * un + b])
                return false;
        }
    return true;
}

bool brute_associated(const FieldContext& F, const FundamentalUnit& U, std::int64_t n,
                      std::int64_t bound)
{
    check_bound(n, bound, "brute_associated");
    if (n == 1)
        return true;
    const auto un = static_cast<std::uint64_t>(n);
    std::vector<bool> reached(un * un, false);
    for (const ModQuadInt& x : unit_cycle(F, U, un))
        for (std::uint64_t z = 0; z < un; ++z) {
            const ModQuadInt y = mod_mul(F, ModQuadInt{z, 0, un}, x);
            reached[y.a * un + y.b] = true;
        }
    for (bool r : reached)
        if (!r)
            return false;
    return true;
}

bool brute_ideal_preserving(const FieldContext& F, std::int64_t n, std::int64_t bound)
{
    check_bound(n, bound, "brute_ideal_preserving");
    struct Prime {
        std::int64_t p;
        std::vector<SmallQuadInt> gens;
    };
    std::vector<Prime> primes;
    for (const auto& pp : factorize(n))
        for (auto& g : primes_above(F, pp.p))
            primes.push_back({pp.p, std::move(g)});

    // R meets P outside P^2
    for (const auto& P : primes) {
        const std::int64_t M = P.p * P.p;
        check_bound(M, bound, "brute_ideal_preserving");
        const auto uM = static_cast<std::uint64_t>(M);
        const IdealResidues inP(F, P.gens, uM);
        const IdealResidues inP2(F, ideal_product(F, P.gens, P.gens), uM);
        const bool witness = any_order_residue(n, uM, [&](const ModQuadInt& x) {
            return inP.contains(x) && !inP2.contains(x);
        });
        if (!witness)
            return false;
    }
    // R meets P1 outside P2, for every ordered pair of distinct primes
    for (std::size_t i = 0; i < primes.size(); ++i)
        for (std::size_t j = 0; j < primes.size(); ++j) {
            if (i == j)
                continue;
            const auto& P1 = primes[i];
            const auto& P2 = primes[j];
            const std::int64_t M = P1.p == P2.p ? P1.p * P1.p : P1.p * P2.p;
            check_bound(M, bound, "brute_ideal_preserving");
            const auto uM = static_cast<std::uint64_t>(M);
            const IdealResidues in1(F, P1.gens, uM);
            const IdealResidues in2(F, P2.gens, uM);
            const bool witness = any_order_residue(n, uM, [&](const ModQuadInt& x) {
                return in1.contains(x) && !in2.contains(x);
            });
            if (!witness)
                return false;
        }
    return true;
}

}  // namespace quadorder
