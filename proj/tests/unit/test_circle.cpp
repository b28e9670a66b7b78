#include <doctest.h>

#include <cmath>

#include "rslab/circle.hpp"
#include "rslab/forms.hpp"

using namespace rslab;

TEST_CASE("delta symbol: exactness at M=100") {
    DeltaDecomposition dd(100);
    CHECK(dd.Q() == doctest::Approx(20.0));
    CHECK(dd.delta(0) == doctest::Approx(1.0).epsilon(1e-8));
    CHECK(std::fabs(dd.delta(5)) < 1e-8);
    CHECK(std::fabs(dd.delta(-150)) < 1e-6);
    std::int64_t worst_n = 0;
    double w = dd.worst_defect(0, &worst_n);
    CAPTURE(worst_n);
    CHECK(w < 1e-6);
    CHECK_THROWS(DeltaDecomposition(2));
}

TEST_CASE("delta symbol: exactness at M=400 and g properties") {
    DeltaDecomposition dd(400);
    CHECK(dd.worst_defect() < 1e-6);
    auto rep = g_properties_check(dd);
    // Parseval-type integral bounded by C'' log^2 Q
    CHECK(rep.l1l2_over_log2q < 50.0);
    // |u| tail decays
    CHECK(rep.tail_decay_at_10 < 0.05);
    // g flattens toward 1 for small q and u as M grows
    CHECK(rep.flatness_small_qu < 0.30);
}

TEST_CASE("shifted sums: direct vs decomposed at N=256") {
    auto d = hecke_eigenforms(12, 4 * 256 + 16);
    FormTable f = table_of(d[0]);
    auto W = SmoothWindow::plateau(0.5, 1.0, 2.0, 3.0);
    auto V = SmoothWindow::plateau(0.4, 0.9, 2.2, 3.4);
    auto res = shifted_sum_decomposed(f, f, 1, 256, W, V);
    CAPTURE(res.direct);
    CAPTURE(res.value);
    CAPTURE(res.defect_bound);
    CHECK(std::fabs(res.value - res.direct) <= res.defect_bound + 1e-9);
    if (std::fabs(res.direct) > 1e-6)
        CHECK(res.value == doctest::Approx(res.direct).epsilon(1e-3));
    CHECK_THROWS(shifted_sum_decomposed(f, f, 0, 256, W, V));  // h = 0 rejected
}

TEST_CASE("shifted sums: empty support and table-range errors") {
    auto d = hecke_eigenforms(12, 64);
    FormTable f = table_of(d[0]);
    auto W = SmoothWindow::plateau(0.5, 1.0, 2.0, 3.0);
    CHECK(shifted_sum_direct(f, f, 1, 1, W) == doctest::Approx(f(1) * f(2) * W(1.0)));
    CHECK_THROWS(shifted_sum_direct(f, f, 1, 4096, W));
}

TEST_CASE("shifted exponent: slope machinery") {
    auto d = hecke_eigenforms(12, 3 * (1 << 12) + 16);
    FormTable f = table_of(d[0]);
    auto W = SmoothWindow::plateau(0.5, 1.0, 2.0, 3.0);
    std::vector<std::int64_t> Ns{1 << 8, 1 << 9, 1 << 10, 1 << 11, 1 << 12};
    auto rep = shifted_exponent(f, f, 1, Ns, W);
    CHECK(rep.used_points >= 3);
    CHECK(std::isfinite(rep.slope));
    CHECK(rep.N.size() == 5);
    std::vector<std::int64_t> tooFew{1 << 8, 1 << 9};
    CHECK_THROWS(shifted_exponent(f, f, 1, tooFew, W));
}

TEST_CASE("integral transform probe") {
    DeltaDecomposition dd(1024);
    auto p1 = integral_transform_probe(dd, 1, 1, 1, 1024, 1);
    CHECK(std::isfinite(p1.magnitude));
    // magnitude consistent with the (q/Q) scale, generous factor
    CHECK(p1.magnitude <= 10.0 * p1.bound_qQ);
    // off-localization: distant n,m drive the oscillation far off resonance
    auto p2 = integral_transform_probe(dd, 1, 1, 900, 1024, 1);
    CHECK(p2.magnitude < 1e-6);
    // flat-g sanity against the closed sinc evaluation
    CHECK(p1.flat_vs_closed < 1e-8);
}
