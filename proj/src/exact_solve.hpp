#pragma once

// Exact solution of over-determined integer linear systems. Independent rows
// are located modulo a large prime, then the selected square-ish subsystem is
// reduced over the rationals and the answer is checked against every row.

#include "g2web/bigint.hpp"

#include <optional>
#include <vector>

namespace g2web::detail {

struct IntegerSystem {
    int cols = 0;
    std::vector<std::vector<BigInt>> rows;
    std::vector<BigInt> rhs;
};

struct ExactSolution {
    std::vector<BigRational> particular;             // free variables set to zero
    std::vector<std::vector<BigRational>> null_basis;  // one vector per free column
    std::vector<int> pivot_cols;
};

/// Returns nullopt when the system is inconsistent.
std::optional<ExactSolution> solve_exact(const IntegerSystem& system);

/// True when x satisfies every row exactly.
bool satisfies(const IntegerSystem& system, const std::vector<BigRational>& x);

/// Greedy support reduction: repeatedly adds multiples of null vectors that
/// cancel an entry without growing the support elsewhere.
std::vector<BigRational> sparsify(std::vector<BigRational> x, const std::vector<std::vector<BigRational>>& null_basis);

} // namespace g2web::detail
