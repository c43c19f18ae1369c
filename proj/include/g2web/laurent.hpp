#pragma once

#include "g2web/bigint.hpp"
#include "g2web/weights.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace g2web {

/// Sparse bivariate Laurent polynomial with exact integer coefficients.
/// Exponent pairs reuse Weight: (i, j) stands for x^i y^j.
class LaurentPoly {
public:
    using Terms = std::map<Weight, BigInt>;

    LaurentPoly() = default;
    explicit LaurentPoly(const BigInt& constant);

    static LaurentPoly monomial(Weight exponent, const BigInt& coeff = 1);

    const Terms& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    BigInt coeff(Weight exponent) const;
    void add_term(Weight exponent, const BigInt& coeff);

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly p, const LaurentPoly& q) { return p += q; }
    friend LaurentPoly operator-(LaurentPoly p, const LaurentPoly& q) { return p -= q; }
    friend LaurentPoly operator*(const LaurentPoly& p, const LaurentPoly& q);
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    friend bool operator==(const LaurentPoly& p, const LaurentPoly& q) { return p.terms_ == q.terms_; }

    /// x^i y^j -> x^j y^i.
    LaurentPoly transposed() const;
    /// x^i y^j -> x^-i y^-j.
    LaurentPoly inverted_exponents() const;
    /// Multiplies by x^shift.
    LaurentPoly shifted(Weight shift) const;

    LaurentPoly pow(int n) const;

    /// One line per term, "coeff x^i y^j", sorted by (i, j).
    std::string to_report() const;

private:
    Terms terms_;
};

/// Sum of x^s over the seven steps, in the weights-module convention.
LaurentPoly step_polynomial();

/// The twelve-term kernel exactly as printed, in the printed x, y convention.
LaurentPoly printed_kernel();

/// Coefficient of x^nu in step_polynomial()^n: unconstrained n-step walks to nu.
BigInt free_walk_coeff(int n, Weight nu);

enum class FitStatus { exact_fit, no_fit };

/// A kernel K and shift d such that w(0, n, mu) = [x^(mu + d)] K X^n.
struct KernelFit {
    LaurentPoly kernel;
    Weight shift;
    int train_lo = 0;
    int train_hi = 0;
    int verified_hi = -1;  // held-out verification reached n = verified_hi
    int radius = 0;
    FitStatus status = FitStatus::no_fit;
    std::string note;
};

struct KernelFailure {
    int n = 0;
    Weight mu;
    BigInt expected;
    BigInt actual;
};

struct KernelVerification {
    bool ok = true;
    int max_n = 0;
    std::size_t checks = 0;
    std::optional<KernelFailure> first_failure;
};

/// Checks the coefficient identity for every n <= max_n and every dominant mu
/// that has a nonzero count or lies in the support of K X^n shifted by -d.
KernelVerification verify_kernel(const LaurentPoly& kernel, Weight shift, int max_n);
KernelVerification verify_kernel(const KernelFit& fit, int max_n);

struct FitOptions {
    int train_lo = 0;
    int train_hi = 8;
    int radius = 6;
    std::vector<Weight> shifts{Weight{0, 0}};
    int verify_hi = 14;  // held-out range train_hi+1 .. verify_hi
};

/// Solves the exact linear system for the kernel coefficients on the box
/// |i|, |j| <= radius, trying each shift. Among exact solutions, greedily
/// minimises support size. Returns no_fit as a value when nothing fits.
KernelFit fit_kernel(const FitOptions& options);

/// Term-by-term comparison between two kernels.
struct KernelDiff {
    std::vector<std::pair<Weight, BigInt>> only_in_first;
    std::vector<std::pair<Weight, BigInt>> only_in_second;
    std::vector<std::tuple<Weight, BigInt, BigInt>> mismatched;
    bool identical() const { return only_in_first.empty() && only_in_second.empty() && mismatched.empty(); }
};

KernelDiff diff_kernels(const LaurentPoly& first, const LaurentPoly& second);

/// Plain-text reconciliation report between the printed kernel and a fit.
std::string kernel_report(const KernelFit& fit, int verify_max);

} // namespace g2web
