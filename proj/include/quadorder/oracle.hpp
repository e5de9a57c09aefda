#pragma once

#include <cstdint>
#include <vector>

#include "quadorder/pell.hpp"

namespace quadorder {

inline constexpr std::int64_t kOracleBound = 200;

/// An ideal J of O_K with M O_K inside J, stored as its image in O_K/(M):
/// a membership bitmap over the M^2 residues (a, b), indexed a*M + b.
class IdealResidues {
public:
    /// The ideal generated by `gens`, i.e. the additive span of g and g*omega.
    IdealResidues(const FieldContext& F, const std::vector<SmallQuadInt>& gens, std::uint64_t M);

    bool contains(std::uint64_t a, std::uint64_t b) const { return bits_[a * M_ + b]; }
    bool contains(const ModQuadInt& x) const { return contains(x.a, x.b); }
    std::uint64_t modulus() const { return M_; }
    std::uint64_t size() const;

private:
    std::uint64_t M_;
    std::vector<bool> bits_;
};

/// Generator sets of the prime ideals above p: (p) when inert, else
/// (p, omega - r) for each root r from splitting_type.
std::vector<std::vector<SmallQuadInt>> primes_above(const FieldContext& F, std::int64_t p);

/// Generators of the product ideal.
std::vector<SmallQuadInt> ideal_product(const FieldContext& F, const std::vector<SmallQuadInt>& x,
                                        const std::vector<SmallQuadInt>& y);

/// |U(O_K/(M))| by enumeration: residues whose norm is coprime to M.
std::int64_t quotient_unit_count(const FieldContext& F, std::int64_t M,
                                 std::int64_t bound = kOracleBound);

/// Every coset of U(O/(n)) / U(Z/n) meets a power of u.
bool brute_locally_associated(const FieldContext& F, const FundamentalUnit& U, std::int64_t n,
                              std::int64_t bound = kOracleBound);

/// For all primes P, Q above divisors of n: R meets P outside P^2, and for
/// P != Q, R meets P outside Q. Tested inside O/(p^2) and O/(pq).
bool brute_ideal_preserving(const FieldContext& F, std::int64_t n,
                            std::int64_t bound = kOracleBound);

/// O/(n) = (Z/n) * <u mod n>: every residue is z * u^k.
bool brute_associated(const FieldContext& F, const FundamentalUnit& U, std::int64_t n,
                      std::int64_t bound = kOracleBound);

}  // namespace quadorder
