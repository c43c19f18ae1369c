#include "g2web/walks.hpp"

#include <algorithm>
#include <sstream>

namespace g2web {

namespace {

// Dense layer of the DP over the rectangle [0, amax] x [0, bmax].
class Layer {
public:
    Layer(int amax, int bmax)
        : amax_(amax), bmax_(bmax), cells_(static_cast<std::size_t>(amax + 1) * static_cast<std::size_t>(bmax + 1)) {}

    bool contains(Weight w) const { return w.a >= 0 && w.b >= 0 && w.a <= amax_ && w.b <= bmax_; }
    BigInt& at(Weight w) { return cells_[index(w)]; }
    const BigInt& at(Weight w) const { return cells_[index(w)]; }
    int amax() const { return amax_; }
    int bmax() const { return bmax_; }

private:
    std::size_t index(Weight w) const {
        return static_cast<std::size_t>(w.a) * static_cast<std::size_t>(bmax_ + 1) + static_cast<std::size_t>(w.b);
    }
    int amax_;
    int bmax_;
    std::vector<BigInt> cells_;
};

// Whether stepping by s into position p is allowed (p dominant is checked by caller).
constexpr bool wall_allows(Weight arrival, Weight step) { return !(step == Weight{0, 0} && arrival.b == 0); }

// Advances one layer. keep(p) restricts which cells of the new layer are filled.
template <class Keep>
void advance(const Layer& from, Layer& to, Keep keep) {
    for (int a = 0; a <= to.amax(); ++a) {
        for (int b = 0; b <= to.bmax(); ++b) {
            Weight p{a, b};
            if (!keep(p)) continue;
            BigInt& acc = to.at(p);
            acc = 0;
            for (Weight s : step_set()) {
                Weight q = p - s;
                if (!from.contains(q) || !wall_allows(p, s)) continue;
                const BigInt& v = from.at(q);
                if (v != 0) acc += v;
            }
        }
    }
}

} // namespace

Word LatticeWalk::word() const {
    Word w;
    for (std::size_t i = 1; i < positions.size(); ++i) {
        auto s = step_from_weight(positions[i] - positions[i - 1]);
        if (!s) throw std::logic_error("walk contains a non-step");
        w.push_back(*s);
    }
    return w;
}

WalkValidation validate_walk(std::span<const Weight> positions) {
    WalkValidation r;
    auto fail = [&](std::size_t i, std::string why) {
        r.valid = false;
        r.violation = WalkViolation{i, std::move(why)};
        return r;
    };
    if (positions.empty()) return fail(0, "empty sequence");
    for (std::size_t i = 0; i < positions.size(); ++i) {
        if (!is_dominant(positions[i])) return fail(i, "position " + to_string(positions[i]) + " is not dominant");
        if (i == 0) continue;
        Weight d = positions[i] - positions[i - 1];
        if (!step_from_weight(d)) return fail(i, "difference " + to_string(d) + " is not a step");
        if (!wall_allows(positions[i], d)) return fail(i, "stationary step on the wall b = 0 at " + to_string(positions[i]));
    }
    return r;
}

BigInt count_walks(DominantWeight start, int n, DominantWeight end) {
    if (n < 0) return 0;
    const Weight s = start, e = end;
    const int amax = s.a + n, bmax = s.b + 2 * n;
    if (e.a > amax || e.b > bmax) return 0;
    Layer cur(amax, bmax), next(amax, bmax);
    cur.at(s) = 1;
    for (int k = 1; k <= n; ++k) {
        const int left = n - k;
        // Only cells from which the end is still reachable in `left` steps.
        advance(cur, next, [&](Weight p) {
            return std::abs(p.a - e.a) <= left && std::abs(p.b - e.b) <= 2 * left &&
                   std::abs(p.a - s.a) <= k && std::abs(p.b - s.b) <= 2 * k;
        });
        std::swap(cur, next);
    }
    return cur.at(e);
}

std::map<Weight, BigInt> count_table(DominantWeight start, int n) {
    std::map<Weight, BigInt> out;
    if (n < 0) return out;
    const Weight s = start;
    const int amax = s.a + n, bmax = s.b + 2 * n;
    Layer cur(amax, bmax), next(amax, bmax);
    cur.at(s) = 1;
    for (int k = 1; k <= n; ++k) {
        advance(cur, next, [&](Weight p) { return std::abs(p.a - s.a) <= k && std::abs(p.b - s.b) <= 2 * k; });
        std::swap(cur, next);
    }
    for (int a = 0; a <= amax; ++a)
        for (int b = 0; b <= bmax; ++b)
            if (cur.at({a, b}) != 0) out.emplace(Weight{a, b}, cur.at({a, b}));
    return out;
}

void for_each_walk(DominantWeight start, int n, DominantWeight end,
                   const std::function<void(const LatticeWalk&)>& visit, std::uint64_t budget) {
    if (n < 0) return;
    std::uint64_t total = 1;
    for (int i = 0; i < n; ++i) {
        if (total > budget / 7) throw BudgetExceeded("7^" + std::to_string(n) + " exceeds the enumeration budget");
        total *= 7;
    }
    if (total > budget) throw BudgetExceeded("7^" + std::to_string(n) + " exceeds the enumeration budget");

    const Weight target = end;
    LatticeWalk walk;
    walk.positions.reserve(static_cast<std::size_t>(n) + 1);
    walk.positions.push_back(start);
    std::function<void()> rec = [&]() {
        const int depth = walk.length();
        const Weight here = walk.positions.back();
        if (depth == n) {
            if (here == target) visit(walk);
            return;
        }
        const int left = n - depth - 1;
        for (Weight s : step_set()) {
            Weight p = here + s;
            if (!is_dominant(p) || !wall_allows(p, s)) continue;
            if (std::abs(p.a - target.a) > left || std::abs(p.b - target.b) > 2 * left) continue;
            walk.positions.push_back(p);
            rec();
            walk.positions.pop_back();
        }
    };
    rec();
}

std::vector<LatticeWalk> enumerate_walks(DominantWeight start, int n, DominantWeight end, std::uint64_t budget) {
    std::vector<LatticeWalk> out;
    for_each_walk(start, n, end, [&](const LatticeWalk& w) { out.push_back(w); }, budget);
    return out;
}

std::vector<BigInt> closed_sequence(int max_n) {
    std::vector<BigInt> seq;
    if (max_n < 0) return seq;
    seq.reserve(static_cast<std::size_t>(max_n) + 1);
    seq.emplace_back(1);
    const int amax = max_n / 2 + 1, bmax = max_n + 1;
    Layer cur(amax, bmax), next(amax, bmax);
    cur.at({0, 0}) = 1;
    for (int k = 1; k <= max_n; ++k) {
        const int left = max_n - k;
        advance(cur, next, [&](Weight p) {
            return p.a <= std::min(k, left) && p.b <= std::min(2 * k, 2 * left);
        });
        std::swap(cur, next);
        seq.push_back(cur.at({0, 0}));
    }
    return seq;
}

RecurrenceReport check_recurrence(const std::vector<BigInt>& a) {
    RecurrenceReport report;
    for (std::size_t i = 3; i < a.size(); ++i) {
        const long n = static_cast<long>(i);
        RecurrenceRow row;
        row.n = static_cast<int>(n);
        row.lhs = BigInt((n + 5) * (n + 6)) * a[i];
        row.rhs = BigInt(2 * (n - 1) * (2 * n + 5)) * a[i - 1] + BigInt((n - 1) * (19 * n + 18)) * a[i - 2] +
                  BigInt(14 * (n - 1) * (n - 2)) * a[i - 3];
        row.holds = row.lhs == row.rhs;
        if (!row.holds && report.all_hold) {
            report.all_hold = false;
            report.first_failure = row.n;
        }
        report.rows.push_back(std::move(row));
    }
    return report;
}

RecurrenceReport check_recurrence(int max_n) { return check_recurrence(closed_sequence(max_n)); }

std::string format_bfile(const std::vector<BigInt>& sequence) {
    std::ostringstream os;
    for (std::size_t i = 0; i < sequence.size(); ++i) os << i << ' ' << sequence[i].get_str() << '\n';
    return os.str();
}

} // namespace g2web
