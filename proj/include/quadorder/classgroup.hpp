#pragma once

#include <cstdint>
#include <vector>

#include "quadorder/pell.hpp"

namespace quadorder {

struct FormClassData {
    std::int64_t disc = 0;
    std::int64_t h = 1;
    std::int64_t h_plus = 0;  ///< narrow class number; 0 for imaginary fields
    int unit_norm_sign = 1;
};

/// Binary quadratic form a x^2 + b xy + c y^2.
struct Form {
    std::int64_t a, b, c;
    bool operator==(const Form&) const = default;
    auto operator<=>(const Form&) const = default;
};

/// Primitive reduced positive definite forms of discriminant D < 0.
std::vector<Form> reduced_definite_forms(std::int64_t D);

/// Primitive reduced indefinite forms of discriminant D > 0:
/// 0 < b < sqrt(D) and sqrt(D) - b < 2|a| < sqrt(D) + b.
std::vector<Form> reduced_indefinite_forms(std::int64_t D);

/// One reduction step on a reduced indefinite form; permutes the reduced forms.
Form rho(const Form& f, std::int64_t D);

/// Number of rho-cycles among the reduced indefinite forms, i.e. h+(D).
std::int64_t count_form_cycles(std::int64_t D);

FormClassData class_number(const FieldContext& F, const FundamentalUnit& U);

inline bool maximal_order_is_hfd(const FormClassData& C) { return C.h <= 2; }

}  // namespace quadorder
