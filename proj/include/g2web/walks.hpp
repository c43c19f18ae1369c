#pragma once

#include "g2web/bigint.hpp"
#include "g2web/weights.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace g2web {

/// A dominant lattice walk: positions[0] is the start, positions.back() the end.
struct LatticeWalk {
    std::vector<Weight> positions;

    int length() const { return static_cast<int>(positions.size()) - 1; }
    /// The step letters taken by the walk.
    Word word() const;
};

struct WalkViolation {
    std::size_t index = 0;  // position at which the rule is broken
    std::string reason;
};

struct WalkValidation {
    bool valid = true;
    std::optional<WalkViolation> violation;
};

/// Checks dominance, step membership and the wall rule (no stationary step
/// arriving at a position with b = 0). Reports the first violation.
WalkValidation validate_walk(std::span<const Weight> positions);

/// Number of walks of length n from start to end.
BigInt count_walks(DominantWeight start, int n, DominantWeight end);

/// All endpoints reachable in exactly n steps, with their walk counts.
std::map<Weight, BigInt> count_table(DominantWeight start, int n);

class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t kDefaultEnumerationBudget = 7ull * 7 * 7 * 7 * 7 * 7 * 7 * 7 * 7;  // 7^9

/// Streams every walk from start to end of length n, in lexicographic order of
/// step tokens. Throws BudgetExceeded if 7^n exceeds the budget.
void for_each_walk(DominantWeight start, int n, DominantWeight end,
                   const std::function<void(const LatticeWalk&)>& visit,
                   std::uint64_t budget = kDefaultEnumerationBudget);

std::vector<LatticeWalk> enumerate_walks(DominantWeight start, int n, DominantWeight end,
                                         std::uint64_t budget = kDefaultEnumerationBudget);

/// a(0..N) where a(n) counts closed walks at the origin.
std::vector<BigInt> closed_sequence(int max_n);

struct RecurrenceRow {
    int n = 0;
    BigInt lhs;
    BigInt rhs;
    bool holds = false;
};

struct RecurrenceReport {
    std::vector<RecurrenceRow> rows;  // n = 3..N
    bool all_hold = true;
    std::optional<int> first_failure;
};

/// Evaluates (n+5)(n+6)a(n) against
/// 2(n-1)(2n+5)a(n-1) + (n-1)(19n+18)a(n-2) + 14(n-1)(n-2)a(n-3).
RecurrenceReport check_recurrence(int max_n);
RecurrenceReport check_recurrence(const std::vector<BigInt>& sequence);

/// OEIS b-file body: "n a(n)" per line.
std::string format_bfile(const std::vector<BigInt>& sequence);

} // namespace g2web
