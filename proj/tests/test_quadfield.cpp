#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "quadorder/quadfield.hpp"

using namespace quadorder;

namespace {

std::vector<std::int64_t> squarefree_between(std::int64_t lo, std::int64_t hi)
{
    std::vector<std::int64_t> out;
    for (std::int64_t d = lo; d <= hi; ++d)
        if (d != 0 && d != 1 && oracle::squarefree(d))
            out.push_back(d);
    return out;
}

}  // namespace

TEST_CASE("make_field")
{
    const auto f2 = make_field(2);
    CHECK(f2.kind == OmegaKind::Sqrt);
    CHECK(f2.disc == 8);
    const auto f5 = make_field(5);
    CHECK(f5.kind == OmegaKind::Half);
    CHECK(f5.disc == 5);
    const auto fm3 = make_field(-3);
    CHECK(fm3.kind == OmegaKind::Half);
    CHECK(fm3.disc == -3);
    CHECK(make_field(-1).disc == -4);
    CHECK_THROWS_AS(make_field(12), std::invalid_argument);
    CHECK_THROWS_AS(make_field(0), std::invalid_argument);
    CHECK_THROWS_AS(make_field(1), std::invalid_argument);
    for (auto d : squarefree_between(-300, 300)) {
        const auto F = make_field(d);
        REQUIRE((oracle::mod(F.disc, 4) == 0 || oracle::mod(F.disc, 4) == 1));
        REQUIRE((F.kind == OmegaKind::Half) == (oracle::mod(d, 4) == 1));
    }
}

TEST_CASE("qi_mul, qi_norm, qi_conj: examples")
{
    const auto F2 = make_field(2);
    const auto F5 = make_field(5);
    const BigQuadInt u{1, 1};
    CHECK(qi_mul(F2, u, u) == BigQuadInt{3, 2});
    CHECK(qi_mul(F2, u, BigQuadInt{3, 2}) == BigQuadInt{7, 5});
    CHECK(qi_mul(F5, BigQuadInt{0, 1}, BigQuadInt{0, 1}) == BigQuadInt{1, 1});

    CHECK(qi_norm(F2, u) == -1);
    CHECK(qi_norm(F5, BigQuadInt{0, 1}) == -1);
    CHECK(qi_norm(make_field(-7), BigQuadInt{1, 0}) == 1);

    CHECK(qi_conj(F2, u) == BigQuadInt{1, -1});
    CHECK(qi_conj(F5, BigQuadInt{0, 1}) == BigQuadInt{1, -1});
    CHECK(qi_conj(make_field(13), BigQuadInt{7, 0}) == BigQuadInt{7, 0});
}

TEST_CASE("norm multiplicativity and conjugation, random samples")
{
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::int64_t> coord(-1000, 1000);
    for (auto d : squarefree_between(-50, 50)) {
        const auto F = make_field(d);
        for (int it = 0; it < 200; ++it) {
            const SmallQuadInt x{coord(rng), coord(rng)}, y{coord(rng), coord(rng)};
            REQUIRE(qi_norm(F, qi_mul(F, x, y)) == qi_norm(F, x) * qi_norm(F, y));
            const auto xc = qi_mul(F, x, qi_conj(F, x));
            REQUIRE(xc.b == 0);
            REQUIRE(xc.a == qi_norm(F, x));
            // matches the independent multiplication rule
            const auto o = oracle::mul(d, {x.a, x.b}, {y.a, y.b});
            const auto z = qi_mul(F, x, y);
            REQUIRE((o.a == z.a && o.b == z.b));
        }
    }
}

TEST_CASE("reduction is a ring homomorphism")
{
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<std::int64_t> coord(-1000, 1000);
    std::uniform_int_distribution<std::uint64_t> mod(1, 100);
    for (auto d : squarefree_between(-50, 50)) {
        const auto F = make_field(d);
        for (int it = 0; it < 200; ++it) {
            const SmallQuadInt x{coord(rng), coord(rng)}, y{coord(rng), coord(rng)};
            const std::uint64_t M = mod(rng);
            REQUIRE(reduce(qi_mul(F, x, y), M) == mod_mul(F, reduce(x, M), reduce(y, M)));
            REQUIRE(mod_norm(F, reduce(x, M)) == residue(qi_norm(F, x), M));
            // big and small coordinates reduce identically
            const BigQuadInt bx{mpz_class(x.a), mpz_class(x.b)};
            REQUIRE(reduce(bx, M) == reduce(x, M));
        }
    }
}

TEST_CASE("mod_pow")
{
    const auto F2 = make_field(2);
    CHECK(mod_pow(F2, ModQuadInt{1, 1, 5}, 3) == ModQuadInt{2, 0, 5});
    CHECK(mod_pow(F2, ModQuadInt{1, 1, 2}, 2) == ModQuadInt{1, 0, 2});
    CHECK(mod_pow(F2, ModQuadInt{3, 4, 7}, 0) == ModQuadInt{1, 0, 7});
    CHECK_THROWS_AS(mod_pow(F2, ModQuadInt{0, 0, 1}, 3), std::invalid_argument);
    // agrees with repeated multiplication
    const auto F = make_field(-19);
    const ModQuadInt x{5, 9, 37};
    ModQuadInt acc = mod_one(37);
    for (std::uint64_t e = 0; e < 60; ++e) {
        REQUIRE(mod_pow(F, x, e) == acc);
        acc = mod_mul(F, acc, x);
    }
}

TEST_CASE("in_order")
{
    CHECK(in_order(BigQuadInt{7, 5}, 5));
    CHECK_FALSE(in_order(BigQuadInt{1, 1}, 5));
    CHECK(in_order(BigQuadInt{1, 1}, 1));
    CHECK(in_order(SmallQuadInt{3, -10}, 5));
    CHECK(in_order(ModQuadInt{3, 10, 20}, 5));
    CHECK_FALSE(in_order(ModQuadInt{3, 4, 20}, 5));
    CHECK_THROWS_AS(in_order(ModQuadInt{3, 4, 20}, 3), std::invalid_argument);
    CHECK_THROWS_AS(in_order(BigQuadInt{1, 1}, 0), std::invalid_argument);
}

TEST_CASE("splitting_type: examples")
{
    CHECK(splitting_type(make_field(2), 5).kind == SplitKind::Inert);
    const auto r2 = splitting_type(make_field(2), 2);
    CHECK(r2.kind == SplitKind::Ramified);
    CHECK(r2.roots == std::vector<std::int64_t>{0});
    const auto r17 = splitting_type(make_field(17), 2);
    CHECK(r17.kind == SplitKind::Split);
    CHECK(r17.roots.size() == 2);
    CHECK(splitting_type(make_field(5), 2).kind == SplitKind::Inert);
    CHECK_THROWS_AS(splitting_type(make_field(2), 9), std::invalid_argument);
}

TEST_CASE("splitting partition agrees with counting roots of the minimal polynomial")
{
    for (auto d : squarefree_between(-60, 60)) {
        const auto F = make_field(d);
        for (std::int64_t p = 2; p < 60; ++p) {
            if (!oracle::prime(p))
                continue;
            const auto rep = splitting_type(F, p);
            // count residues r with r^2 = c1 r + c0 mod p, computed from d directly
            int roots = 0;
            for (std::int64_t r = 0; r < p; ++r) {
                const std::int64_t lhs = r * r;
                const std::int64_t rhs = oracle::mod(d, 4) == 1 ? r + (d - 1) / 4 : d;
                roots += oracle::mod(lhs - rhs, p) == 0;
            }
            const SplitKind expect =
                roots == 0 ? SplitKind::Inert : roots == 2 ? SplitKind::Split : SplitKind::Ramified;
            REQUIRE(rep.kind == expect);
            REQUIRE(rep.roots.size() == static_cast<std::size_t>(roots));
            if (p > 2)
                REQUIRE((rep.kind == SplitKind::Ramified) == (d % p == 0));
            REQUIRE(split_kind(F, p) == rep.kind);
        }
    }
}
