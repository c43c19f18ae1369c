#include "g2web/laurent.hpp"

#include <doctest.h>

#include <random>

using namespace g2web;

namespace {

LaurentPoly random_poly(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> e(-3, 3), c(-5, 5), k(0, 5);
    LaurentPoly p;
    int terms = k(rng);
    for (int i = 0; i < terms; ++i) p.add_term({e(rng), e(rng)}, c(rng));
    return p;
}

} // namespace

TEST_CASE("ring axioms") {
    std::mt19937_64 rng(11);
    const LaurentPoly one(1);
    for (int i = 0; i < 200; ++i) {
        auto p = random_poly(rng), q = random_poly(rng), r = random_poly(rng);
        CHECK(p * one == p);
        CHECK((p * q) * r == p * (q * r));
        CHECK(p * q == q * p);
        CHECK(p * (q + r) == p * q + p * r);
        CHECK((p + q) - q == p);
    }
    CHECK(LaurentPoly::monomial({1, 0}) * LaurentPoly::monomial({-1, 0}) == one);
}

TEST_CASE("step polynomial") {
    auto x = step_polynomial();
    CHECK(x.size() == 7);
    CHECK(x.coeff({0, 0}) == 1);
    CHECK(x.inverted_exponents() == x);
    CHECK((x * x).coeff({0, 0}) == 7);
}

TEST_CASE("printed kernel transcription") {
    auto y = printed_kernel();
    CHECK(y.size() == 12);
    CHECK(y.coeff({1, 0}) == 1);
    CHECK(y.coeff({-7, 0}) == -1);
    CHECK(y.transposed().transposed() == y);
}

TEST_CASE("free walk coefficients") {
    CHECK(free_walk_coeff(0, {0, 0}) == 1);
    CHECK(free_walk_coeff(2, {0, 0}) == 7);
    for (Weight s : step_set()) CHECK(free_walk_coeff(1, s) == 1);
    auto x = step_polynomial();
    LaurentPoly prev(1);
    BigInt seven = 1;
    for (int n = 1; n <= 12; ++n) {
        LaurentPoly cur = prev * x;
        seven *= 7;
        BigInt total = 0;
        for (auto& [nu, c] : cur.terms()) {
            total += c;
            BigInt rec = 0;
            for (Weight s : step_set()) rec += prev.coeff(nu - s);
            CHECK(rec == c);
        }
        CHECK(total == seven);
        prev = cur;
    }
    CHECK(free_walk_coeff(3, {1, 2}) == step_polynomial().pow(3).coeff({1, 2}));
}

TEST_CASE("printed kernel fails the coefficient rule") {
    for (Weight shift : {Weight{0, 0}, Weight{1, 0}, Weight{0, 1}}) {
        CHECK_FALSE(verify_kernel(printed_kernel(), shift, 4).ok);
        CHECK_FALSE(verify_kernel(printed_kernel().transposed(), shift, 4).ok);
    }
}

TEST_CASE("kernel fit") {
    FitOptions opt;
    auto fit = fit_kernel(opt);
    REQUIRE(fit.status == FitStatus::exact_fit);
    CHECK(fit.kernel.size() == 12);
    CHECK(fit.kernel.coeff({0, 0}) == 1);
    auto v = verify_kernel(fit, 14);
    CHECK(v.ok);
    CHECK(v.checks > 0);

    // Trivially consistent below the training range.
    CHECK(verify_kernel(fit, 0).ok);

    // One flipped sign must be caught.
    LaurentPoly bad = fit.kernel;
    bad.add_term({-2, 3}, 2);
    CHECK_FALSE(verify_kernel(bad, fit.shift, 14).ok);

    auto report = kernel_report(fit, 14);
    CHECK(report.find("does NOT verify under the stated coefficient rule") != std::string::npos);
    CHECK(report.find("only-in-fitted") != std::string::npos);
}

TEST_CASE("n = 0 training pins the origin") {
    FitOptions opt;
    opt.train_lo = 0;
    opt.train_hi = 0;
    opt.radius = 1;
    opt.verify_hi = 0;
    auto fit = fit_kernel(opt);
    REQUIRE(fit.status == FitStatus::exact_fit);
    for (int a = 0; a <= 1; ++a)
        for (int b = 0; b <= 1; ++b) CHECK(fit.kernel.coeff({a, b}) == (a == 0 && b == 0 ? 1 : 0));
}
