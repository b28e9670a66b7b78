#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>

#include "golden.hpp"
#include "rslab/cache.hpp"
#include "rslab/forms.hpp"
#include "rslab/series.hpp"

using namespace rslab;

TEST_CASE("victor-miller basis: exact q-expansions") {
    // weight 12: single form with tau coefficients (eta-product ground truth)
    auto b12 = series::victor_miller_z(12, 10);
    REQUIRE(b12.size() == 1);
    CHECK(b12[0][1] == 1);
    CHECK(b12[0][2] == -24);
    CHECK(b12[0][3] == 252);
    CHECK(b12[0][4] == -1472);
    // weight 26 is one-dimensional
    CHECK(series::victor_miller_z(26, 10).size() == 1);
    // weight 24: echelon with leading terms q and q^2
    auto b24 = series::victor_miller_z(24, 10);
    REQUIRE(b24.size() == 2);
    CHECK(b24[0][1] == 1);
    CHECK(b24[0][2] == 0);
    CHECK(b24[1][1] == 0);
    CHECK(b24[1][2] == 1);
    CHECK_THROWS(series::victor_miller_z(24, 2));  // too short to echelonize
    CHECK(series::dim_cusp(14) == 0);
    CHECK(hecke_eigenforms(14, 100).empty());
}

TEST_CASE("ntt long tables agree with the exact basis") {
    for (int k : {16, 24, 36}) {
        auto exact = series::victor_miller_z(k, 48);
        auto lng = series::victor_miller_long(k, 48);
        REQUIRE(exact.size() == lng.size());
        for (size_t i = 0; i < exact.size(); ++i)
            for (int m = 0; m <= 48; ++m) {
                double e = mpz_get_d(exact[i][m].get_mpz_t());
                CHECK(lng[i][m] == doctest::Approx(e).epsilon(1e-12));
            }
    }
}

TEST_CASE("eigenforms: lambda(2), recursion residuals, Deligne bound") {
    auto f12 = hecke_eigenforms(12, 2000);
    REQUIRE(f12.size() == 1);
    CHECK(f12[0].lam[1] == 1.0);
    CHECK(f12[0].lam[2] == doctest::Approx(golden::kLambdaDelta2).epsilon(1e-12));
    CHECK(hecke_relation_residual(f12[0].lam, 1000) < 1e-9);

    auto f24 = hecke_eigenforms(24, 1000);
    REQUIRE(f24.size() == 2);
    CHECK(f24[0].lam[2] < f24[1].lam[2]);  // sorted by lambda(2)
    for (const auto& g : f24) CHECK(hecke_relation_residual(g.lam, 1000) < 1e-10);
    // Deligne at primes
    for (const auto& g : f24)
        for (int p : {2, 3, 5, 7, 11, 13, 971})
            CHECK(std::fabs(g.lam[p]) <= 2.0 + 1e-9);
}

TEST_CASE("numeric diagonalization agrees with exact one-dimensional spaces") {
    for (int k : {12, 16, 18, 20, 22, 26}) {
        auto forms = hecke_eigenforms(k, 600);
        REQUIRE(forms.size() == 1);
        auto exact = series::victor_miller_z(k, 600);
        for (int n = 1; n <= 600; ++n) {
            double a = mpz_get_d(exact[0][n].get_mpz_t());
            double lam = a * std::pow((double)n, -0.5 * (k - 1));
            if (std::fabs(lam) > 1e-12)
                CHECK(forms[0].lam[n] == doctest::Approx(lam).epsilon(1e-10));
        }
    }
}

TEST_CASE("eisenstein coefficients") {
    auto e0 = eisenstein_coeffs(0.0, 100);
    CHECK(e0[6] == doctest::Approx(4.0).epsilon(1e-14));  // divisor count
    CHECK(e0[1] == doctest::Approx(1.0).epsilon(1e-14));
    auto e1 = eisenstein_coeffs(1.0, 10);
    CHECK(e1[2] == doctest::Approx(2.0 * std::cos(std::log(2.0))).epsilon(1e-13));
    CHECK(hecke_relation_residual(e0, 1000) < 1e-12);
    auto er = eisenstein_coeffs(0.7, 2000);
    CHECK(hecke_relation_residual(er, 1000) < 1e-11);
}

TEST_CASE("rankin-selberg convolution coefficients") {
    auto d = hecke_eigenforms(12, 64);
    FormTable f = table_of(d[0]);
    auto rs = rankin_selberg_coeffs(f, f, 16);
    CHECK(rs.coeff[1] == doctest::Approx(1.0));
    // m=4: (a,b) = (4,1) and (1,2)
    CHECK(rs.coeff[4] == doctest::Approx(f(4) * f(4) + 1.0).epsilon(1e-13));
    // m=2: single term (a,b) = (2,1): lambda(2)^2 = 576/2048
    CHECK(rs.coeff[2] == doctest::Approx(0.28125).epsilon(1e-13));
    CHECK_THROWS(rankin_selberg_coeffs(f, f, 1000));  // base tables too short
}

TEST_CASE("hecke residual flags planted defects") {
    auto e0 = eisenstein_coeffs(0.0, 1000);
    CHECK(hecke_relation_residual(e0, 1000) < 1e-12);
    e0[4] += 1e-3;
    CHECK(hecke_relation_residual(e0, 1000) >= 1e-3);
}

TEST_CASE("ramanujan bound on average") {
    auto forms = hecke_eigenforms(12, 100000);
    double s = 0.0;
    std::int64_t N = 100000;
    for (std::int64_t n = 1; n <= N; ++n) s += forms[0].lam[n] * forms[0].lam[n];
    CHECK(s <= 10.0 * N * std::log((double)N));
}

TEST_CASE("coefficient cache round-trips bit-identically") {
    std::string dir = "/tmp/rslab_test_cache";
    std::filesystem::remove_all(dir);
    auto forms = hecke_eigenforms(16, 500);
    FormTable t = table_of(forms[0]);
    cache::save(t, dir);
    FormTable u = cache::load(dir + "/" + cache::table_filename(t));
    REQUIRE(u.n_max() == t.n_max());
    for (std::int64_t n = 1; n <= t.n_max(); ++n) CHECK(u.lam[n] == t.lam[n]);  // bitwise
    // verify passes, then flag a corrupted row
    auto res = cache::verify_dir(dir);
    REQUIRE(res.size() == 1);
    CHECK(res[0].ok);
    {
        FILE* f = fopen((dir + "/" + cache::table_filename(t)).c_str(), "r+");
        fseek(f, -20, SEEK_END);
        fputs("9.99", f);
        fclose(f);
    }
    res = cache::verify_dir(dir);
    CHECK(!res[0].ok);
    std::filesystem::remove_all(dir);
}

TEST_CASE("maass input: header validation and residual reporting") {
    std::string path = "/tmp/rslab_test_maass.coeffs";
    {
        FILE* f = fopen(path.c_str(), "w");
        fprintf(f, "# r 13.779751 sign 1\n");
        // divisor-model coefficients: multiplicative within range
        auto e = eisenstein_coeffs(13.779751, 64);
        for (int n = 1; n <= 64; ++n) fprintf(f, "%d,%.17g\n", n, e[n]);
        fclose(f);
    }
    auto m = load_maass_file(path);
    CHECK(m.r == doctest::Approx(13.779751));
    CHECK(m.sign == 1);
    CHECK(m.mult_residual < 1e-10);
    std::filesystem::remove(path);
    CHECK_THROWS(load_maass_file("/tmp/definitely_missing_rslab.coeffs"));
}
