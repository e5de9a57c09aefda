#pragma once

#include <cstdint>
#include <unordered_map>

#include "quadorder/classgroup.hpp"
#include "quadorder/pell.hpp"

namespace quadorder {

/// The index-n order Z + n O_K in Q(sqrt d).
struct OrderSpec {
    std::int64_t d = 0;
    std::int64_t n = 1;
};

struct ClassificationRecord {
    std::int64_t d = 0;
    std::int64_t n = 1;
    std::int64_t D = 0;
    std::int64_t m = 1;
    std::int64_t L = 1;
    bool ideal_preserving = true;
    bool locally_associated = true;
    bool associated = true;
    std::int64_t h_maximal = 1;
    std::int64_t h_order = 1;
    bool hfd = false;

    bool operator==(const ClassificationRecord&) const = default;
};

/// Per-field data shared by every order of that field.
struct FieldData {
    FieldContext field;
    FundamentalUnit unit;
    FormClassData classes;
};

FieldData make_field_data(std::int64_t d);

bool is_ideal_preserving(const FieldContext& F, const Factorization& n);
bool is_ideal_preserving(const OrderSpec& spec);
bool is_locally_associated(const OrderSpec& spec);
bool is_associated(const OrderSpec& spec);

/// |Cl(Z + n O_K)| = h(O_K) * L / m. Throws InternalError unless m | L.
std::int64_t order_class_number(const OrderSpec& spec, std::int64_t m, std::int64_t L,
                                std::int64_t h_maximal);

/// n prime, or twice an odd prime.
bool is_prime_or_twice_odd_prime(std::int64_t n);

/// Half-factoriality of Z + n O_K: for n = 1, h <= 2; otherwise h <= 2, the
/// order is associated, and n is prime or twice an odd prime.
bool is_hfd(const OrderSpec& spec, bool associated, std::int64_t h_maximal);

/// Classifies orders of one field; caches unit indices per prime power, so it
/// is cheap to call for many n. Not safe to share between threads.
class OrderClassifier {
public:
    explicit OrderClassifier(std::int64_t d);
    explicit OrderClassifier(FieldData data);

    const FieldData& data() const { return data_; }

    ClassificationRecord classify(std::int64_t n);
    ClassificationRecord classify(std::int64_t n, const Factorization& fn);

private:
    struct PrimePowerEntry {
        std::int64_t m;
        std::int64_t L;
        bool inert;
    };
    const PrimePowerEntry& prime_power(const PrimePower& pp);

    FieldData data_;
    std::unordered_map<std::int64_t, PrimePowerEntry> cache_;
};

ClassificationRecord classify_order(const OrderSpec& spec);

}  // namespace quadorder
