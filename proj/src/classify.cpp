#include "quadorder/classify.hpp"

#include <numeric>
#include <string>

#include "quadorder/lfun.hpp"
#include "quadorder/unitindex.hpp"

namespace quadorder {

namespace {

void check_spec(const OrderSpec& spec)
{
    if (spec.n < 1)
        throw std::invalid_argument("order index must be positive, got " + std::to_string(spec.n));
}

}  // namespace

FieldData make_field_data(std::int64_t d)
{
    FieldData fd;
    fd.field = make_field(d);
    fd.unit = fundamental_unit(fd.field);
    fd.classes = class_number(fd.field, fd.unit);
    return fd;
}

bool is_ideal_preserving(const FieldContext& F, const Factorization& n)
{
    for (const auto& pp : n)
        if (split_kind(F, pp.p) != SplitKind::Inert)
            return false;
    return true;
}

bool is_ideal_preserving(const OrderSpec& spec)
{
    check_spec(spec);
    return is_ideal_preserving(make_field(spec.d), factorize(spec.n));
}

bool is_locally_associated(const OrderSpec& spec)
{
    check_spec(spec);
    const FieldContext F = make_field(spec.d);
    const FundamentalUnit U = fundamental_unit(F);
    return min_power(F, U, spec.n) == l_value(spec.n, spec.d);
}

bool is_associated(const OrderSpec& spec)
{
    return is_ideal_preserving(spec) && is_locally_associated(spec);
}

std::int64_t order_class_number(const OrderSpec& spec, std::int64_t m, std::int64_t L,
                                std::int64_t h_maximal)
{
    if (m < 1 || L % m != 0)
        throw InternalError("unit index m = " + std::to_string(m) + " does not divide L = "
                            + std::to_string(L) + " for (d, n) = (" + std::to_string(spec.d) + ", "
                            + std::to_string(spec.n) + ")");
    return h_maximal * (L / m);
}

bool is_prime_or_twice_odd_prime(std::int64_t n)
{
    if (is_prime(n))
        return true;
    return n % 2 == 0 && n / 2 != 2 && is_prime(n / 2);
}

bool is_hfd(const OrderSpec& spec, bool associated, std::int64_t h_maximal)
{
    check_spec(spec);
    if (h_maximal > 2)
        return false;
    if (spec.n == 1)
        return true;
    return associated && is_prime_or_twice_odd_prime(spec.n);
}

OrderClassifier::OrderClassifier(std::int64_t d) : data_(make_field_data(d)) {}

OrderClassifier::OrderClassifier(FieldData data) : data_(std::move(data)) {}

const OrderClassifier::PrimePowerEntry& OrderClassifier::prime_power(const PrimePower& pp)
{
    const std::int64_t q = pp.value();
    auto it = cache_.find(q);
    if (it != cache_.end())
        return it->second;
    PrimePowerEntry e{min_power_prime_power(data_.field, data_.unit, pp.p, pp.a),
                      l_prime_power(pp.p, pp.a, data_.field.d),
                      split_kind(data_.field, pp.p) == SplitKind::Inert};
    return cache_.emplace(q, e).first->second;
}

ClassificationRecord OrderClassifier::classify(std::int64_t n)
{
    if (n < 1)
        throw std::invalid_argument("order index must be positive, got " + std::to_string(n));
    return classify(n, factorize(n));
}

ClassificationRecord OrderClassifier::classify(std::int64_t n, const Factorization& fn)
{
    const FieldContext& F = data_.field;
    ClassificationRecord r;
    r.d = F.d;
    r.n = n;
    r.D = F.disc;
    r.m = 1;
    r.L = 1;
    r.ideal_preserving = true;
    for (const auto& pp : fn) {
        const auto& e = prime_power(pp);
        r.m = std::lcm(r.m, e.m);
        r.L *= e.L;
        r.ideal_preserving = r.ideal_preserving && e.inert;
    }
    r.locally_associated = r.m == r.L;
    r.associated = r.ideal_preserving && r.locally_associated;
    r.h_maximal = data_.classes.h;
    const OrderSpec spec{F.d, n};
    r.h_order = order_class_number(spec, r.m, r.L, r.h_maximal);
    r.hfd = is_hfd(spec, r.associated, r.h_maximal);
    return r;
}

ClassificationRecord classify_order(const OrderSpec& spec)
{
    check_spec(spec);
    OrderClassifier c(spec.d);
    return c.classify(spec.n);
}

}  // namespace quadorder
