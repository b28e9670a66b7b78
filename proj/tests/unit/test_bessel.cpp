#include <doctest.h>

#include <cmath>

#include "golden.hpp"
#include "rslab/bessel.hpp"

using namespace rslab;

TEST_CASE("bessel_j: goldens across all regimes") {
    CHECK(bessel_j(0, 0.0) == 1.0);
    CHECK(bessel_j(3, 0.0) == 0.0);
    // series region
    CHECK(bessel_j(11, 1.0) == doctest::Approx(golden::kJ11_1).epsilon(1e-11));
    CHECK(bessel_j(11, 4 * M_PI) == doctest::Approx(golden::kJ11_4pi).epsilon(1e-12));
    // mid-range integer (integral representation)
    CHECK(bessel_j(0, 20.0) == doctest::Approx(golden::kJ0_20).epsilon(1e-12));
    CHECK(bessel_j(0, 50.0) == doctest::Approx(golden::kJ0_50).epsilon(1e-12));
    CHECK(bessel_j(40, 40.0) == doctest::Approx(golden::kJ40_40).epsilon(1e-9));  // transition
    CHECK(bessel_j(120, 130.0) == doctest::Approx(golden::kJ120_130).epsilon(1e-9));
    CHECK(bessel_j(11, 300.0) == doctest::Approx(golden::kJ11_300).epsilon(1e-10));
    // real order mid-range
    CHECK(bessel_j(3.5, 7.25) == doctest::Approx(golden::kJ3p5_7p25).epsilon(1e-10));
    // monotone zone (backward recurrence)
    CHECK(bessel_j(200, 90.0) == doctest::Approx(golden::kJ200_90).epsilon(1e-10));
    // hankel zone
    CHECK(bessel_j(40, 2000.0) == doctest::Approx(golden::kJ40_2000).epsilon(1e-9));
    CHECK(bessel_j(17, 95000.0) == doctest::Approx(golden::kJ17_95000).epsilon(1e-9));
    CHECK_THROWS(bessel_j(301.0, 1.0));
    CHECK_THROWS(bessel_j(2.0, 2.0e5));
}

TEST_CASE("bessel_j: small-argument domination |J_{k-1}(x)| <= x^{k-1}") {
    for (double x : {0.05, 0.2, 0.5, 0.9}) {
        CHECK(std::fabs(bessel_j(19, x)) <= std::pow(x, 19));
        CHECK(std::fabs(bessel_j(11, x)) <= std::pow(x, 11));
    }
}

TEST_CASE("bessel_j: three-term recurrence across regimes") {
    for (double nu : {1.0, 2.5, 11.0, 36.5, 80.0}) {
        for (double x : {0.7, 6.0, 18.0, 33.0, 75.0, 140.0, 900.0}) {
            double a = bessel_j(nu - 1, x), b = bessel_j(nu, x), c = bessel_j(nu + 1, x);
            double lhs = a + c, rhs = 2 * nu / x * b;
            double scale = std::max({std::fabs(a), std::fabs(b), std::fabs(c), 1e-280});
            CHECK(std::fabs(lhs - rhs) / scale < 1e-9);
        }
    }
}

TEST_CASE("imaginary-order K and the Y pair") {
    CHECK(bessel_k_imag(0.0, 1.0) == doctest::Approx(golden::kK0_1).epsilon(1e-12));
    CHECK(bessel_k_imag(0.0, 0.1) == doctest::Approx(golden::kK0_0p1).epsilon(1e-12));
    CHECK(bessel_k_imag(2.0, 1.0) == doctest::Approx(golden::kK2i_1).epsilon(1e-10));
    // nu -> 0 limit matches the K_0 series route at 1e-9
    CHECK(std::fabs(bessel_k_imag(1e-7, 2.0) - bessel_k_imag(0.0, 2.0)) < 1e-9);
    CHECK(bessel_y0(1.0) == doctest::Approx(golden::kY0_1).epsilon(1e-10));
    CHECK(bessel_y0(50.0) == doctest::Approx(golden::kY0_50).epsilon(1e-10));
    CHECK(bessel_y_imag_pair(2.0, 1.0) == doctest::Approx(golden::kYpair2i_1).epsilon(1e-9));
    CHECK(bessel_y_imag_pair(2.0, 10.0) == doctest::Approx(golden::kYpair2i_10).epsilon(1e-9));
    CHECK(bessel_y_imag_pair(2.0, 300.0) == doctest::Approx(golden::kYpair2i_300).epsilon(1e-8));
}

TEST_CASE("hankel decomposition: reconstruction and derivative bounds") {
    auto h1 = hankel_decomposition(12, 100.0);
    CHECK(h1.residual < 1e-8);
    auto h2 = hankel_decomposition(12, 1e4);
    CHECK(h2.residual < 1e-8);
    CHECK(std::abs(h2.w) <= 1.0);
    // leading Hankel amplitude: |W| ~ 1/(2 pi)
    CHECK(std::abs(h2.w) == doctest::Approx(1.0 / (2 * M_PI)).epsilon(0.1));
    auto h3 = hankel_decomposition(40, 1000.0);
    CHECK(h3.residual < 1e-6);
    for (int j = 0; j <= 2; ++j) CHECK(h1.deriv_bound[j] < 1.0);
    CHECK_THROWS(hankel_decomposition(40, 2.0));  // below the oscillatory regime
}
