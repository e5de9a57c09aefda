#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "quadorder/classgroup.hpp"
#include "quadorder/pell.hpp"

using namespace quadorder;

namespace {

FormClassData classes_of(std::int64_t d)
{
    const auto F = make_field(d);
    return class_number(F, fundamental_unit(F));
}

std::int64_t d_of_disc(std::int64_t D) { return oracle::mod(D, 4) == 1 ? D : D / 4; }

}  // namespace

TEST_CASE("class numbers: examples")
{
    CHECK(classes_of(-5).h == 2);
    CHECK(classes_of(-1).h == 1);
    CHECK(classes_of(-3).h == 1);
    CHECK(classes_of(-23).h == 3);
    CHECK(classes_of(-163).h == 1);
    const auto c10 = classes_of(10);
    CHECK(c10.disc == 40);
    CHECK(c10.h == 2);
    CHECK(c10.h_plus == 2);
    const auto c3 = classes_of(3);
    CHECK(c3.h == 1);
    CHECK(c3.h_plus == 2);
    CHECK(classes_of(79).h == 3);
}

TEST_CASE("reduced forms")
{
    CHECK(reduced_definite_forms(-20) == std::vector<Form>{{1, 0, 5}, {2, 2, 3}});
    for (const auto& f : reduced_indefinite_forms(40)) {
        CHECK(f.b * f.b - 4 * f.a * f.c == 40);
        CHECK(rho(f, 40).b * rho(f, 40).b - 4 * rho(f, 40).a * rho(f, 40).c == 40);
    }
}

TEST_CASE("rho permutes the reduced indefinite forms")
{
    for (auto D : oracle::fundamental_discriminants(400)) {
        if (D < 0)
            continue;
        const auto forms = reduced_indefinite_forms(D);
        std::vector<Form> images;
        for (const auto& f : forms)
            images.push_back(rho(f, D));
        std::sort(images.begin(), images.end());
        REQUIRE(images == forms);
    }
}

TEST_CASE("definite class numbers match triple enumeration and the analytic formula")
{
    for (auto D : oracle::fundamental_discriminants(400)) {
        if (D > 0)
            continue;
        const auto C = classes_of(d_of_disc(D));
        INFO("D = " << D);
        REQUIRE(C.disc == D);
        REQUIRE(C.h == oracle::definite_class_number_by_triples(D));
        REQUIRE(C.h == oracle::definite_class_number_analytic(D));
    }
}

TEST_CASE("indefinite class numbers match the analytic formula")
{
    for (auto D : oracle::fundamental_discriminants(400)) {
        if (D < 0)
            continue;
        const auto F = make_field(d_of_disc(D));
        const auto U = fundamental_unit(F);
        const auto C = class_number(F, U);
        const auto pc = to_pell_coordinates(F, U.u);
        const double eps = (pc.x.get_d() + pc.y.get_d() * std::sqrt(double(D))) / 2;
        const double h = oracle::indefinite_class_number_analytic(D, std::log(eps));
        INFO("D = " << D);
        REQUIRE(std::abs(h - std::round(h)) < 1e-6);
        REQUIRE(C.h == std::llround(h));
        REQUIRE(C.h_plus == (U.norm_sign < 0 ? C.h : 2 * C.h));
        REQUIRE(C.unit_norm_sign == U.norm_sign);
    }
}

TEST_CASE("maximal_order_is_hfd")
{
    CHECK(maximal_order_is_hfd(classes_of(-5)));
    CHECK(maximal_order_is_hfd(classes_of(10)));
    CHECK_FALSE(maximal_order_is_hfd(classes_of(-23)));
    CHECK_FALSE(maximal_order_is_hfd(classes_of(79)));
}
