#include <doctest.h>

#include <cmath>
#include <complex>

#include "golden.hpp"
#include "rslab/gamma.hpp"
#include "rslab/zeta.hpp"

using namespace rslab;

TEST_CASE("log_gamma against known values") {
    CHECK(std::exp(log_gamma({5.0, 0.0})).real() == doctest::Approx(24.0).epsilon(1e-14));
    CHECK(std::exp(log_gamma({0.5, 0.0})).real() == doctest::Approx(std::sqrt(M_PI)).epsilon(1e-14));
    // reflection zone
    CHECK(std::exp(log_gamma({-1.5, 0.0})).real() ==
          doctest::Approx(4.0 * std::sqrt(M_PI) / 3.0).epsilon(1e-12));
    // |Gamma(1 + i)| = sqrt(pi / sinh(pi))
    auto g = std::exp(log_gamma({1.0, 1.0}));
    CHECK(std::abs(g) == doctest::Approx(std::sqrt(M_PI / std::sinh(M_PI))).epsilon(1e-13));
}

TEST_CASE("gamma_ratio goldens and pole detection") {
    CHECK(gamma_ratio({0.0, 0.0}, 12, 12).real() == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(gamma_ratio({2.0, 0.0}, 12, 12).real() ==
          doctest::Approx(golden::kGammaRatio_u2_k12).epsilon(1e-12));
    CHECK(gamma_ratio({5.0, 0.0}, 40, 16).real() ==
          doctest::Approx(golden::kGammaRatio_u5_k40l16).epsilon(1e-12));
    auto v = gamma_ratio({1.0, 2.0}, 20, 12);
    CHECK(v.real() == doctest::Approx(golden::kGammaRatio_c_re).epsilon(1e-12));
    CHECK(v.imag() == doctest::Approx(golden::kGammaRatio_c_im).epsilon(1e-12));
    // Stirling-scale growth: |ratio| on Re u = 3 tracks (ktilde^2)^3 within x2
    for (int k : {40, 80, 200}) {
        double kt2 = (k * k - 144.0) / (16.0 * M_PI * M_PI);
        double ratio = gamma_ratio({3.0, 0.0}, k, 12).real() / std::pow(kt2, 3.0);
        CHECK(ratio > 0.5);
        CHECK(ratio < 2.0);
    }
    CHECK_THROWS(gamma_ratio({-6.0, 0.0}, 12, 12));
}

TEST_CASE("zeta by euler-maclaurin") {
    CHECK(zeta({2.0, 0.0}).real() == doctest::Approx(golden::kZeta2).epsilon(1e-14));
    CHECK(zeta({3.0, 0.0}).real() == doctest::Approx(golden::kZeta_3).epsilon(1e-14));
    auto z = zeta({1.0, 2.0});
    CHECK(z.real() == doctest::Approx(golden::kZeta1p2i_re).epsilon(1e-13));
    CHECK(z.imag() == doctest::Approx(golden::kZeta1p2i_im).epsilon(1e-13));
    CHECK(std::norm(z) == doctest::Approx(golden::kAbsZeta1p2i_sq).epsilon(1e-13));
    CHECK_THROWS(zeta({1.0, 0.0}));
}
