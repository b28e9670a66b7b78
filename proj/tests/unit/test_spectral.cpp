#include <doctest.h>

#include <cmath>
#include <random>

#include "golden.hpp"
#include "rslab/arith.hpp"
#include "rslab/bessel.hpp"
#include "rslab/forms.hpp"
#include "rslab/spectral.hpp"

using namespace rslab;

TEST_CASE("petersson geometric side: pinned values") {
    // k=12: one form, lambda(1)^2 = 1 -> the harmonic weight of Delta
    double w = petersson_geometric(1, 1, 12, 1e-10);
    CHECK(w == doctest::Approx(golden::kOmegaInvDelta).epsilon(1e-9));
    // ratio (1,2)/(1,1) = lambda_Delta(2)
    double w2 = petersson_geometric(1, 2, 12, 1e-10);
    CHECK(w2 / w == doctest::Approx(golden::kLambdaDelta2).epsilon(1e-9));
    // k=14: empty spectral side
    CHECK(std::fabs(petersson_geometric(1, 1, 14, 1e-10) - 0.0) < 1e-8);
    CHECK(std::fabs(petersson_geometric(2, 3, 14, 1e-10)) < 1e-8);
}

TEST_CASE("harmonic weights: solve, positivity, held-out residuals, corridor") {
    for (int k : {12, 24, 28}) {
        auto forms = hecke_eigenforms(k, 64);
        auto w = solve_harmonic_weights(k, forms);
        for (double wi : w.omega_inv) CHECK(wi > 0.0);
        CHECK(w.heldout_residual < 1e-6);
        for (double wi : w.omega_inv) {
            double ratio = wi / k;  // recorded corridor constant C = 10^3
            CHECK(ratio > 1e-3);
            CHECK(ratio < 1e3);
        }
        for (const auto& g : forms) CHECK(g.omega_inv.has_value());
    }
}

TEST_CASE("trace formula cross-check on random pairs") {
    std::mt19937_64 rng(777);
    for (int k : {12, 16, 24}) {
        auto forms = hecke_eigenforms(k, 1000);
        auto w = solve_harmonic_weights(k, forms);
        for (int it = 0; it < 10; ++it) {
            std::int64_t m = rng() % 30 + 1, n = rng() % 30 + 1;
            double lhs = 0.0;
            for (size_t j = 0; j < forms.size(); ++j)
                lhs += w.omega_inv[j] * forms[j].lam[m] * forms[j].lam[n];
            double rhs = petersson_geometric(m, n, k, 1e-10);
            CHECK(lhs == doctest::Approx(rhs).epsilon(1e-6).scale(1.0));
        }
    }
}

TEST_CASE("i^{-k} sign regression: the wrong sign breaks the cross-check") {
    int k = 18;  // k = 2 mod 4, so i^{-k} = -1 genuinely matters
    auto forms = hecke_eigenforms(k, 64);
    auto w = solve_harmonic_weights(k, forms);
    std::int64_t m = 2, n = 3;
    double lhs = 0.0;
    for (size_t j = 0; j < forms.size(); ++j)
        lhs += w.omega_inv[j] * forms[j].lam[m] * forms[j].lam[n];
    // re-evaluate the geometric side with the sign planted wrong
    double sq = 4.0 * M_PI * std::sqrt((double)(m * n));
    double acc = 0.0;
    for (std::int64_t c = 1; c <= 2000; ++c)
        acc += arith::kloosterman(m, n, c) / (double)c * bessel_j(k - 1.0, sq / c);
    double wrong = 0.0 + 2.0 * M_PI * (+1.0) * acc;  // should be (-1)^{k/2} = -1
    double right = 0.0 + 2.0 * M_PI * (-1.0) * acc;
    CHECK(std::fabs(lhs - right) < 1e-7);
    CHECK(std::fabs(lhs - wrong) > 1e-3);
}

TEST_CASE("k-averaged bessel transform vs fourier route") {
    CHECK(bessel_k_average(SmoothWindow::bump(20.0, 40.0), 0.0).sum_side == 0.0);
    auto r = bessel_k_average(SmoothWindow::bump(20.0, 40.0), 50.0);
    CAPTURE(r.sum_side);
    CAPTURE(r.integral_side);
    CHECK(std::fabs(r.diff) < 1e-6);
    auto r2 = bessel_k_average(SmoothWindow::bump(20.0, 40.0), 10.0);
    CHECK(std::fabs(r2.diff) < 1e-6);
    // Fresnel regime x >> K^2: both sides ~ (K/sqrt(x)) scale
    auto r3 = bessel_k_average(SmoothWindow::bump(20.0, 40.0), 3000.0);
    CHECK(std::fabs(r3.diff) < 1e-6);
    CHECK(std::fabs(r3.sum_side) < 10.0 * 30.0 / std::sqrt(3000.0));
}

TEST_CASE("poisson even-weight check") {
    auto u = SmoothWindow::bump(0.5, 3.0);
    CHECK(poisson_even_check(u, 100.0) < 1e-8);
    CHECK(poisson_even_check(u, 10.0) < 1e-3);
    // the narrow window still clears the acceptance tolerance at K=100
    CHECK(poisson_even_check(SmoothWindow::bump(1.0, 2.0), 100.0) < 1e-8);
    // window scaled to integral ~ 0: both terms vanish
    auto u0 = SmoothWindow::bump(1.0, 2.0, 0.0);
    CHECK(poisson_even_check(u0, 100.0) < 1e-12);
}
