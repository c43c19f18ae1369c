#include "exact_solve.hpp"

#include <algorithm>
#include <cstdint>

namespace g2web::detail {

namespace {

constexpr std::uint64_t kPrime = (1ull << 61) - 1;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) {
    unsigned __int128 r = static_cast<unsigned __int128>(a) * b;
    std::uint64_t lo = static_cast<std::uint64_t>(r & kPrime);
    std::uint64_t hi = static_cast<std::uint64_t>(r >> 61);
    std::uint64_t s = lo + hi;
    return s >= kPrime ? s - kPrime : s;
}

std::uint64_t submod(std::uint64_t a, std::uint64_t b) { return a >= b ? a - b : a + kPrime - b; }

std::uint64_t powmod(std::uint64_t a, std::uint64_t e) {
    std::uint64_t r = 1;
    while (e) {
        if (e & 1) r = mulmod(r, a);
        a = mulmod(a, a);
        e >>= 1;
    }
    return r;
}

std::uint64_t invmod(std::uint64_t a) { return powmod(a, kPrime - 2); }

std::uint64_t reduce(const BigInt& v) {
    BigInt m = v % BigInt(static_cast<unsigned long>(kPrime));
    if (m < 0) m += BigInt(static_cast<unsigned long>(kPrime));
    return m.get_ui();
}

// Indices of rows that are independent modulo the prime; nullopt when the
// augmented system is inconsistent modulo the prime.
std::optional<std::vector<int>> independent_rows(const IntegerSystem& sys) {
    const int cols = sys.cols;
    struct Basis {
        std::vector<std::uint64_t> row;  // cols + 1 entries, pivot entry 1
        int pivot;
    };
    std::vector<Basis> basis;
    std::vector<int> chosen;
    std::vector<std::uint64_t> r(static_cast<std::size_t>(cols) + 1);
    for (std::size_t i = 0; i < sys.rows.size(); ++i) {
        for (int c = 0; c < cols; ++c) r[static_cast<std::size_t>(c)] = reduce(sys.rows[i][static_cast<std::size_t>(c)]);
        r[static_cast<std::size_t>(cols)] = reduce(sys.rhs[i]);
        for (const Basis& b : basis) {
            std::uint64_t f = r[static_cast<std::size_t>(b.pivot)];
            if (!f) continue;
            for (int c = 0; c <= cols; ++c)
                if (b.row[static_cast<std::size_t>(c)])
                    r[static_cast<std::size_t>(c)] = submod(r[static_cast<std::size_t>(c)], mulmod(f, b.row[static_cast<std::size_t>(c)]));
        }
        int pivot = -1;
        for (int c = 0; c < cols; ++c)
            if (r[static_cast<std::size_t>(c)]) {
                pivot = c;
                break;
            }
        if (pivot < 0) {
            if (r[static_cast<std::size_t>(cols)]) return std::nullopt;
            continue;
        }
        std::uint64_t inv = invmod(r[static_cast<std::size_t>(pivot)]);
        for (auto& v : r) v = mulmod(v, inv);
        for (Basis& b : basis) {
            std::uint64_t f = b.row[static_cast<std::size_t>(pivot)];
            if (!f) continue;
            for (int c = 0; c <= cols; ++c)
                if (r[static_cast<std::size_t>(c)])
                    b.row[static_cast<std::size_t>(c)] = submod(b.row[static_cast<std::size_t>(c)], mulmod(f, r[static_cast<std::size_t>(c)]));
        }
        basis.push_back({r, pivot});
        chosen.push_back(static_cast<int>(i));
    }
    return chosen;
}

} // namespace

bool satisfies(const IntegerSystem& sys, const std::vector<BigRational>& x) {
    for (std::size_t i = 0; i < sys.rows.size(); ++i) {
        BigRational acc = 0;
        for (int c = 0; c < sys.cols; ++c) {
            const auto& coef = sys.rows[i][static_cast<std::size_t>(c)];
            if (coef != 0 && x[static_cast<std::size_t>(c)] != 0) acc += BigRational(coef) * x[static_cast<std::size_t>(c)];
        }
        if (acc != BigRational(sys.rhs[i])) return false;
    }
    return true;
}

std::optional<ExactSolution> solve_exact(const IntegerSystem& sys) {
    auto chosen = independent_rows(sys);
    if (!chosen) return std::nullopt;
    const int cols = sys.cols;
    std::vector<int> selected = *chosen;

    for (int attempt = 0; attempt < 4; ++attempt) {
        // Rational RREF of the selected rows.
        std::vector<std::vector<BigRational>> m;
        for (int idx : selected) {
            std::vector<BigRational> row(static_cast<std::size_t>(cols) + 1);
            for (int c = 0; c < cols; ++c) row[static_cast<std::size_t>(c)] = sys.rows[static_cast<std::size_t>(idx)][static_cast<std::size_t>(c)];
            row[static_cast<std::size_t>(cols)] = sys.rhs[static_cast<std::size_t>(idx)];
            m.push_back(std::move(row));
        }
        std::vector<int> pivots;
        std::size_t rank = 0;
        for (int c = 0; c < cols && rank < m.size(); ++c) {
            std::size_t p = rank;
            while (p < m.size() && m[p][static_cast<std::size_t>(c)] == 0) ++p;
            if (p == m.size()) continue;
            std::swap(m[p], m[rank]);
            BigRational inv = 1 / m[rank][static_cast<std::size_t>(c)];
            for (auto& v : m[rank]) v *= inv;
            for (std::size_t r = 0; r < m.size(); ++r) {
                if (r == rank || m[r][static_cast<std::size_t>(c)] == 0) continue;
                BigRational f = m[r][static_cast<std::size_t>(c)];
                for (int k = c; k <= cols; ++k) m[r][static_cast<std::size_t>(k)] -= f * m[rank][static_cast<std::size_t>(k)];
            }
            pivots.push_back(c);
            ++rank;
        }
        for (std::size_t r = rank; r < m.size(); ++r)
            if (m[r][static_cast<std::size_t>(cols)] != 0) return std::nullopt;

        ExactSolution sol;
        sol.pivot_cols = pivots;
        sol.particular.assign(static_cast<std::size_t>(cols), BigRational(0));
        for (std::size_t r = 0; r < rank; ++r) sol.particular[static_cast<std::size_t>(pivots[r])] = m[r][static_cast<std::size_t>(cols)];
        std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
        for (int p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;
        for (int f = 0; f < cols; ++f) {
            if (is_pivot[static_cast<std::size_t>(f)]) continue;
            std::vector<BigRational> v(static_cast<std::size_t>(cols), BigRational(0));
            v[static_cast<std::size_t>(f)] = 1;
            for (std::size_t r = 0; r < rank; ++r) v[static_cast<std::size_t>(pivots[r])] = -m[r][static_cast<std::size_t>(f)];
            sol.null_basis.push_back(std::move(v));
        }

        // Any row the prime missed shows up here; fold it in and retry.
        bool ok = true;
        for (std::size_t i = 0; i < sys.rows.size(); ++i) {
            BigRational acc = 0;
            for (int c = 0; c < cols; ++c)
                if (sol.particular[static_cast<std::size_t>(c)] != 0)
                    acc += BigRational(sys.rows[i][static_cast<std::size_t>(c)]) * sol.particular[static_cast<std::size_t>(c)];
            if (acc != BigRational(sys.rhs[i])) {
                selected.push_back(static_cast<int>(i));
                ok = false;
                break;
            }
        }
        if (ok) return sol;
    }
    return std::nullopt;
}

std::vector<BigRational> sparsify(std::vector<BigRational> x, const std::vector<std::vector<BigRational>>& null_basis) {
    auto support = [](const std::vector<BigRational>& v) {
        return static_cast<std::size_t>(std::count_if(v.begin(), v.end(), [](const BigRational& q) { return q != 0; }));
    };
    std::size_t best = support(x);
    bool improved = true;
    while (improved) {
        improved = false;
        for (const auto& v : null_basis) {
            for (std::size_t i = 0; i < x.size(); ++i) {
                if (x[i] == 0 || v[i] == 0) continue;
                BigRational t = x[i] / v[i];
                std::vector<BigRational> cand(x.size());
                for (std::size_t k = 0; k < x.size(); ++k) cand[k] = v[k] == 0 ? x[k] : x[k] - t * v[k];
                std::size_t s = support(cand);
                if (s < best) {
                    best = s;
                    x = std::move(cand);
                    improved = true;
                }
            }
        }
    }
    return x;
}

} // namespace g2web::detail
