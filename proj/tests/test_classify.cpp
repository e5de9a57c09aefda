#include <doctest.h>

#include "oracles.hpp"
#include "quadorder/classify.hpp"
#include "quadorder/oracle.hpp"

using namespace quadorder;

namespace {

std::vector<std::int64_t> fields(std::int64_t lo, std::int64_t hi)
{
    std::vector<std::int64_t> out;
    for (std::int64_t d = lo; d <= hi; ++d)
        if (d != 0 && d != 1 && oracle::squarefree(d))
            out.push_back(d);
    return out;
}

}  // namespace

TEST_CASE("classify: examples")
{
    const auto r = classify_order({2, 5});
    CHECK(r.D == 8);
    CHECK(r.m == 3);
    CHECK(r.L == 6);
    CHECK(r.ideal_preserving);
    CHECK_FALSE(r.locally_associated);
    CHECK_FALSE(r.associated);
    CHECK(r.h_maximal == 1);
    CHECK(r.h_order == 2);
    CHECK_FALSE(r.hfd);

    const auto r2 = classify_order({2, 33});
    CHECK(r2.m == 12);
    CHECK(r2.L == 48);
    CHECK(r2.h_order == 4);

    CHECK(classify_order({5, 2}).associated);
    CHECK(classify_order({5, 2}).hfd);
    CHECK(classify_order({-3, 2}).hfd);
    CHECK_FALSE(classify_order({-7, 3}).locally_associated);
    CHECK_FALSE(classify_order({-1, 3}).hfd);
    CHECK(classify_order({-5, 1}).hfd);
    CHECK_FALSE(classify_order({-23, 1}).hfd);
    CHECK_FALSE(classify_order({2, 7}).ideal_preserving);

    CHECK_THROWS_AS(classify_order({12, 2}), std::invalid_argument);
    CHECK_THROWS_AS(classify_order({2, 0}), std::invalid_argument);
}

TEST_CASE("n = 1 is the maximal order")
{
    for (auto d : fields(-50, 50)) {
        const auto r = classify_order({d, 1});
        REQUIRE(r.m == 1);
        REQUIRE(r.L == 1);
        REQUIRE(r.associated);
        REQUIRE(r.h_order == r.h_maximal);
        REQUIRE(r.hfd == (r.h_maximal <= 2));
    }
}

TEST_CASE("flag logic and class number of the order")
{
    for (auto d : fields(-40, 60)) {
        OrderClassifier c(d);
        for (std::int64_t n = 1; n <= 200; ++n) {
            const auto r = c.classify(n);
            REQUIRE(r.L % r.m == 0);
            REQUIRE(r.locally_associated == (r.m == r.L));
            REQUIRE(r.associated == (r.ideal_preserving && r.locally_associated));
            REQUIRE(r.h_order * r.m == r.h_maximal * r.L);
            const bool shape = n == 1 || is_prime_or_twice_odd_prime(n);
            REQUIRE(r.hfd == (r.h_maximal <= 2 && (n == 1 || (r.associated && shape))));
            REQUIRE(r == classify_order({d, n}));
        }
    }
}

TEST_CASE("flags descend from an order to the orders containing it")
{
    for (auto d : fields(-30, 60)) {
        OrderClassifier c(d);
        for (std::int64_t n = 2; n <= 120; ++n) {
            const auto r = c.classify(n);
            for (auto k : divisors_sorted(n)) {
                const auto s = c.classify(k);
                if (r.ideal_preserving)
                    REQUIRE(s.ideal_preserving);
                if (r.locally_associated)
                    REQUIRE(s.locally_associated);
                if (r.associated)
                    REQUIRE(s.associated);
                REQUIRE(r.m % s.m == 0);
            }
        }
    }
}

TEST_CASE("imaginary fields: closed form for local association")
{
    for (auto d : fields(-200, -1)) {
        if (d == -1 || d == -3)
            continue;
        OrderClassifier c(d);
        for (std::int64_t n = 2; n <= 50; ++n) {
            const auto r = c.classify(n);
            REQUIRE(r.m == 1);
            REQUIRE(r.locally_associated == (n == 2 && oracle::mod(d, 8) == 1));
        }
    }
}

TEST_CASE("is_prime_or_twice_odd_prime")
{
    CHECK(is_prime_or_twice_odd_prime(2));
    CHECK(is_prime_or_twice_odd_prime(7));
    CHECK(is_prime_or_twice_odd_prime(6));
    CHECK(is_prime_or_twice_odd_prime(26));
    CHECK_FALSE(is_prime_or_twice_odd_prime(4));
    CHECK_FALSE(is_prime_or_twice_odd_prime(1));
    CHECK_FALSE(is_prime_or_twice_odd_prime(9));
    CHECK_FALSE(is_prime_or_twice_odd_prime(12));
}

TEST_CASE("flags match the brute-force oracle for |d| <= 30, n <= 12")
{
    for (auto d : fields(-30, 30)) {
        const auto F = make_field(d);
        const auto U = fundamental_unit(F);
        OrderClassifier c(d);
        for (std::int64_t n = 2; n <= 12; ++n) {
            const auto r = c.classify(n);
            INFO("d = " << d << ", n = " << n);
            REQUIRE(r.locally_associated == brute_locally_associated(F, U, n));
            REQUIRE(r.ideal_preserving == brute_ideal_preserving(F, n));
            REQUIRE(r.associated == brute_associated(F, U, n));
        }
    }
}

TEST_CASE("ideal preservation is closed under coprime products")
{
    for (auto d : fields(-50, 50)) {
        OrderClassifier c(d);
        for (std::int64_t a = 1; a <= 50; ++a)
            for (std::int64_t b = 1; b <= 50; ++b)
                if (std::gcd(a, b) == 1 && c.classify(a).ideal_preserving
                    && c.classify(b).ideal_preserving)
                    REQUIRE(c.classify(a * b).ideal_preserving);
    }
    const auto r = classify_order({2, 3});
    CHECK(r.m == 4);
    CHECK(r.L == 4);
    CHECK(r.associated);
    CHECK(classify_order({2, 11}).associated);
    const auto s = classify_order({2, 2});
    CHECK(s.m == 2);
    CHECK(s.L == 2);
    CHECK(s.locally_associated);
    CHECK_FALSE(s.ideal_preserving);
}
