#pragma once

#include <cstdint>

#include "quadorder/quadfield.hpp"

namespace quadorder {

/// Generator of U(O_K) modulo torsion for real fields; for imaginary fields
/// the generator of the (cyclic) torsion group itself.
struct FundamentalUnit {
    BigQuadInt u;
    int norm_sign = 1;
    int torsion_order = 2;
};

/// Minimal positive solution of x^2 - D*y^2 = +-4.
struct PellSolution {
    mpz_class x;
    mpz_class y;
};

/// Continued-fraction solver for x^2 - D*y^2 = +-4, D > 0 a nonsquare
/// discriminant. Minimal in y.
PellSolution solve_pell_pm4(std::int64_t D);

FundamentalUnit fundamental_unit(const FieldContext& F);

/// Unit check: |N(u)| = 1, and for real fields u > 1 and no smaller y solves
/// x^2 - D*y^2 = +-4. Rescans exhaustively for y below `rescan_limit`; above it
/// the solution is compared against the continued-fraction solver.
bool verify_unit(const FieldContext& F, const FundamentalUnit& U,
                 std::int64_t rescan_limit = 10'000'000);

/// (x, y) with u = (x + y*sqrt(D)) / 2.
PellSolution to_pell_coordinates(const FieldContext& F, const BigQuadInt& u);

}  // namespace quadorder
