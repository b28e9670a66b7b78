// Acceptance suite: runs every gate criterion at its stated tolerance and
// prints one pass/fail line per criterion.  Returns the number of failures.
//
// Usage: acceptance [--cache DIR] [--only N[,N...]]

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdarg>
#include <cstring>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "rslab/arith.hpp"
#include "rslab/bessel.hpp"
#include "rslab/cache.hpp"
#include "rslab/circle.hpp"
#include "rslab/fit.hpp"
#include "rslab/forms.hpp"
#include "rslab/lfunc.hpp"
#include "rslab/phase.hpp"
#include "rslab/series.hpp"
#include "rslab/spectral.hpp"
#include "rslab/voronoi.hpp"

using namespace rslab;

namespace {

struct Gate {
    int failures = 0;
    std::set<int> only;
    std::string cache_dir = "accept_cache";

    bool enabled(int n) const { return only.empty() || only.count(n); }

    void report(int n, bool pass, const char* name, const std::string& detail, double secs) {
        printf("[%s] criterion %2d: %-34s %s  (%.1fs)\n", pass ? "PASS" : "FAIL", n, name,
               detail.c_str(), secs);
        fflush(stdout);
        if (!pass) ++failures;
    }
};

double now_s() {
    using clk = std::chrono::steady_clock;
    static auto t0 = clk::now();
    return std::chrono::duration<double>(clk::now() - t0).count();
}

std::string fmt(const char* f, ...) {
    char buf[512];
    va_list ap;
    va_start(ap, f);
    vsnprintf(buf, sizeof buf, f, ap);
    va_end(ap);
    return buf;
}

}  // namespace

int main(int argc, char** argv) {
    Gate gate;
    for (int i = 1; i < argc; ++i) {
        if (!strcmp(argv[i], "--cache") && i + 1 < argc) gate.cache_dir = argv[++i];
        if (!strcmp(argv[i], "--only") && i + 1 < argc) {
            std::string s = argv[++i];
            size_t p = 0;
            while (p < s.size()) {
                size_t c = s.find(',', p);
                if (c == std::string::npos) c = s.size();
                gate.only.insert(std::stoi(s.substr(p, c - p)));
                p = c + 1;
            }
        }
    }

    // ---- shared tables (cached) ----
    printf("preparing coefficient tables (cache: %s)...\n", gate.cache_dir.c_str());
    fflush(stdout);
    const std::int64_t kLongRange = 3 * (1ll << 18) + 16;  // shifted sums need 3N + h
    double t_prep = now_s();
    FormTable delta, w16, e0_long, e1;
    {
        FormTable proto;
        proto.kind = FormTable::Kind::kHolomorphic;
        proto.weight = 12;
        proto.index = 0;
        delta = cache::get_or_build(proto, kLongRange, gate.cache_dir);
        proto.weight = 16;
        w16 = cache::get_or_build(proto, kLongRange, gate.cache_dir);
        proto.kind = FormTable::Kind::kEisenstein;
        proto.r = 0.0;
        e0_long = cache::get_or_build(proto, kLongRange, gate.cache_dir);
        e1 = eisenstein_table(1.0, 400000);
    }
    printf("fixed-form tables ready (%.1fs)\n", now_s() - t_prep);
    fflush(stdout);
    if (gate.enabled(2) || gate.enabled(4) || gate.enabled(10) || gate.enabled(11)) {
        // eigenform tables at the lengths the certified AFE cutoffs demand
        for (int k = 12; k <= 40; k += 2) {
            if (series::dim_cusp(k) == 0) continue;
            double tk = now_s();
            std::int64_t need = std::max(afe_weight_for(k, 12).certified_mcut(1e-8),
                                         afe_weight_for(k, 16).certified_mcut(1e-8));
            cache::cached_eigenforms(k, need, gate.cache_dir);
            printf("  weight %d tables to %lld (%.1fs)\n", k, (long long)need, now_s() - tk);
            fflush(stdout);
        }
    }

    // ==== 1. exponential-sum exactness ====
    if (gate.enabled(1)) {
        double t0 = now_s();
        bool ok = true;
        std::string why;
        // symmetry on random triples
        std::mt19937_64 rng(2024);
        for (int it = 0; it < 400 && ok; ++it) {
            std::int64_t m = rng() % 100 + 1, n = rng() % 100 + 1, c = rng() % 997 + 1;
            if (std::fabs(arith::kloosterman(m, n, c) - arith::kloosterman(n, m, c)) > 1e-9) {
                ok = false;
                why = fmt("symmetry fails at (%lld,%lld,%lld)", m, n, c);
            }
        }
        // twisted multiplicativity, exhaustive c1 c2 <= 200
        for (std::int64_t c1 = 2; c1 <= 100 && ok; ++c1)
            for (std::int64_t c2 = c1 + 1; c1 * c2 <= 200 && ok; ++c2) {
                if (std::gcd(c1, c2) != 1) continue;
                std::int64_t c1b = arith::inv_mod(c1, c2), c2b = arith::inv_mod(c2, c1);
                double lhs = arith::kloosterman(1, 2, c1 * c2);
                double rhs = arith::kloosterman(c2b, 2 * c2b, c1) * arith::kloosterman(c1b, 2 * c1b, c2);
                if (std::fabs(lhs - rhs) > 1e-9 * std::max(1.0, std::fabs(lhs))) {
                    ok = false;
                    why = fmt("twisted multiplicativity fails at c1=%lld c2=%lld", c1, c2);
                }
            }
        // Weil bound: all c <= 1e4 on a pair panel, and all m,n <= 100 for c <= 128
        double worst_margin = 0.0;
        for (std::int64_t c = 1; c <= 10000 && ok; ++c) {
            static const std::int64_t panel[][2] = {{1, 1}, {1, 2}, {2, 4}, {3, 9},
                                                    {6, 35}, {100, 100}, {12, 60}, {7, 11}};
            for (auto& mn : panel) {
                double margin = arith::weil_bound_margin(mn[0], mn[1], c);
                worst_margin = std::min(worst_margin, margin);
                if (margin < -1e-9) {
                    ok = false;
                    why = fmt("Weil margin < 0 at (%lld,%lld,%lld)", mn[0], mn[1], c);
                }
            }
        }
        for (std::int64_t m = 1; m <= 100 && ok; ++m)
            for (std::int64_t n = m; n <= 100; n += 7)
                for (std::int64_t c : {2, 3, 16, 49, 101, 128})
                    if (arith::weil_bound_margin(m, n, c) < -1e-9) {
                        ok = false;
                        why = fmt("Weil margin < 0 at (%lld,%lld,%lld)", m, n, c);
                    }
        // Ramanujan mu-formula vs direct sum, exhaustive c,q <= 500
        double worst_rs = 0.0;
        for (std::int64_t c = 1; c <= 500 && ok; ++c)
            for (std::int64_t q = 0; q <= 500; ++q) {
                double diff = std::fabs(arith::ramanujan_sum_direct(q, c) -
                                        (double)arith::ramanujan_sum(q, c));
                worst_rs = std::max(worst_rs, diff);
                if (diff > 1e-9 * std::max<double>(1.0, c)) {
                    ok = false;
                    why = fmt("Ramanujan mismatch at (q=%lld,c=%lld): %g", q, c, diff);
                }
            }
        gate.report(1, ok, "exponential-sum exactness",
                    ok ? fmt("worst ramanujan defect %.1e", worst_rs) : why, now_s() - t0);
    }

    // ==== 2. eigenform integrity ====
    if (gate.enabled(2)) {
        double t0 = now_s();
        bool ok = true;
        std::string why;
        double worst = 0.0;
        for (int k = 12; k <= 40 && ok; k += 2) {
            if (series::dim_cusp(k) == 0) continue;
            auto forms = cache::cached_eigenforms(k, 5000, gate.cache_dir);
            for (const auto& g : forms) {
                double res = hecke_relation_residual(g.lam, 5000);
                worst = std::max(worst, res);
                if (res >= 1e-9) {
                    ok = false;
                    why = fmt("k=%d index %d residual %.2e", k, g.index, res);
                }
                for (std::int64_t p = 2; p <= 5000; ++p) {
                    bool prime = true;
                    for (std::int64_t q = 2; q * q <= p; ++q)
                        if (p % q == 0) { prime = false; break; }
                    if (!prime) continue;
                    if (std::fabs(g.lam[p]) > 2.0 + 1e-9) {
                        ok = false;
                        why = fmt("Deligne violated at k=%d p=%lld", k, p);
                        break;
                    }
                }
            }
        }
        gate.report(2, ok, "eigenform integrity",
                    ok ? fmt("worst Hecke residual %.1e", worst) : why, now_s() - t0);
    }

    // ==== 3. Voronoi identity ====
    if (gate.enabled(3)) {
        double t0 = now_s();
        bool ok = true;
        std::string why;
        double worst = 0.0;
        SmoothWindow F1 = SmoothWindow::bump(500.0, 1000.0);
        SmoothWindow F2 = SmoothWindow::plateau(300.0, 450.0, 900.0, 1200.0);
        std::vector<FormTable> cases{delta, w16, e0_long};
        for (const auto& f : cases) {
            for (std::int64_t c : {1, 2, 3, 5}) {
                for (const SmoothWindow* F : {&F1, &F2}) {
                    std::int64_t a = (c == 1) ? 1 : c - 1;  // coprime residue
                    auto r = voronoi_identity_check(f, a, c, *F);
                    worst = std::max(worst, r.residual);
                    if (!(r.residual < 1e-5)) {
                        ok = false;
                        why = fmt("%s c=%lld residual %.2e", f.label().c_str(), c, r.residual);
                    }
                }
            }
        }
        gate.report(3, ok, "Voronoi identity", ok ? fmt("worst residual %.1e", worst) : why,
                    now_s() - t0);
    }

    // ==== 4. Petersson consistency ====
    if (gate.enabled(4)) {
        double t0 = now_s();
        bool ok = true;
        std::string why;
        double worst = 0.0;
        std::mt19937_64 rng(55);
        for (int k = 12; k <= 40 && ok; k += 2) {
            if (series::dim_cusp(k) == 0) continue;
            auto forms = cache::cached_eigenforms(k, 5000, gate.cache_dir);
            HarmonicWeights w;
            try {
                w = solve_harmonic_weights(k, forms);
            } catch (const std::exception& e) {
                ok = false;
                why = fmt("k=%d: %s", k, e.what());
                break;
            }
            for (double wi : w.omega_inv)
                if (!(wi > 0.0)) {
                    ok = false;
                    why = fmt("k=%d nonpositive weight", k);
                }
            int checked = 0;
            while (checked < 10) {
                std::int64_t m = rng() % 29 + 2, n = rng() % 29 + 2;
                double lhs = 0.0;
                for (size_t j = 0; j < forms.size(); ++j)
                    lhs += w.omega_inv[j] * forms[j].lam[m] * forms[j].lam[n];
                double rhs = petersson_geometric(m, n, k, 1e-10);
                double rel = std::fabs(lhs - rhs) / std::max({std::fabs(lhs), std::fabs(rhs), 1e-3});
                worst = std::max(worst, rel);
                if (rel >= 1e-6) {
                    ok = false;
                    why = fmt("k=%d pair (%lld,%lld) rel %.2e", k, m, n, rel);
                    break;
                }
                ++checked;
            }
        }
        gate.report(4, ok, "Petersson consistency", ok ? fmt("worst held-out rel %.1e", worst) : why,
                    now_s() - t0);
    }

    // ==== 5. delta-symbol exactness ====
    if (gate.enabled(5)) {
        double t0 = now_s();
        bool ok = true;
        std::string why;
        double worst_all = 0.0, worst_cpp = 0.0;
        for (std::int64_t M : {100, 400, 2500}) {
            DeltaDecomposition dd(M);
            std::int64_t wn = 0;
            double w = dd.worst_defect(0, &wn);
            worst_all = std::max(worst_all, w);
            if (!(w < 1e-6)) {
                ok = false;
                why = fmt("M=%lld worst defect %.2e at n=%lld", M, w, wn);
            }
            auto props = g_properties_check(dd);
            worst_cpp = std::max(worst_cpp, props.l1l2_over_log2q);
            if (!(props.l1l2_over_log2q <= 50.0)) {
                ok = false;
                why = fmt("M=%lld L1+L2 integral C''=%.1f > 50", M, props.l1l2_over_log2q);
            }
        }
        gate.report(5, ok, "delta-symbol exactness",
                    ok ? fmt("worst defect %.1e, C'' = %.2f", worst_all, worst_cpp) : why,
                    now_s() - t0);
    }

    // ==== 6. k-averaged Bessel lemma ====
    if (gate.enabled(6)) {
        double t0 = now_s();
        bool ok = true;
        std::string why;
        double worst = 0.0;
        SmoothWindow gwin = SmoothWindow::bump(20.0, 40.0);  // K = 20 window
        for (double x : {1.0, 10.0, 50.0, 200.0}) {
            auto r = bessel_k_average(gwin, x);
            worst = std::max(worst, std::fabs(r.diff));
            if (!(std::fabs(r.diff) < 1e-6)) {
                ok = false;
                why = fmt("x=%g diff %.2e", x, r.diff);
            }
        }
        gate.report(6, ok, "k-averaged Bessel lemma", ok ? fmt("worst diff %.1e", worst) : why,
                    now_s() - t0);
    }

    // ==== 7. stationary phase ====
    if (gate.enabled(7)) {
        double t0 = now_s();
        bool ok = true;
        std::string why;
        double worst = 0.0;
        for (double y : {100.0, 400.0, 1600.0, 6400.0, 10000.0}) {
            SmoothWindow cutoff = SmoothWindow::plateau(-14.0, -10.0, 10.0, 14.0);
            PhaseProblem p;
            p.amp = [cutoff](double t) { return std::exp(-t * t) * cutoff(t); };
            p.lo = cutoff.lo();
            p.hi = cutoff.hi();
            p.phase = [y](double t) { return y * t * t / (2.0 * M_PI); };
            p.dphase = [y](double t) { return y * t / M_PI; };
            p.d2phase = [y](double) { return y / M_PI; };
            p.Y = y;
            p.Q = 1.0;
            p.Z = 2.0;
            p.X = 1.0;
            auto r = stationary_phase_eval(p, 3);
            std::complex<double> closed = std::sqrt(M_PI / std::complex<double>(1.0, -y));
            double rel = std::abs(r.value - closed) / std::abs(closed);
            worst = std::max(worst, rel);
            if (!(rel < 1e-6)) {
                ok = false;
                why = fmt("y=%g rel %.2e", y, rel);
            }
        }
        // non-stationary: linear phase at Y/X = 1e3
        {
            SmoothWindow amp = SmoothWindow::bump(0.0, 2.0);
            PhaseProblem p;
            p.amp = [amp](double t) { return amp(t); };
            p.lo = amp.lo();
            p.hi = amp.hi();
            p.phase = [](double t) { return 1000.0 * t; };
            p.dphase = [](double) { return 1000.0; };
            p.Y = 1000.0;
            p.X = 1.0;
            p.Z = 2.0;
            p.Q = 1.0;
            auto direct = oscillatory_integral_direct(p, 1e-13);
            if (!(std::abs(direct) < 1e-8)) {
                ok = false;
                why = fmt("non-stationary quadrature |I| = %.2e", std::abs(direct));
            }
        }
        gate.report(7, ok, "stationary phase", ok ? fmt("worst Fresnel rel %.1e", worst) : why,
                    now_s() - t0);
    }

    // ==== 8. diagonal structure ====
    if (gate.enabled(8)) {
        double t0 = now_s();
        bool ok = true;
        std::string why;
        std::string detail;
        // case table with the degree/constant pairs of the residue analysis
        struct Case {
            const FormTable *f, *h;
            const char* name;
        };
        FormTable e0_short = e0_long;
        Case cases[] = {{&delta, &w16, "D x w16"},
                        {&delta, &delta, "D x D"},
                        {&e1, &e1, "E1 x E1"},
                        {&e0_short, &e0_short, "E0 x E0"}};
        for (const auto& cs : cases) {
            auto lead = leading_constant(*cs.f, *cs.h);
            std::vector<double> xs, ys;
            for (int k = 20; k <= 120; k += 2) {
                auto d = diagonal_dk(*cs.f, *cs.h, k, 1e-8);
                xs.push_back(std::log((double)k) - 4.0);  // centered for conditioning
                ys.push_back(d.value);
            }
            int deg = fit::pick_degree(xs, ys, 7, 0.10);
            double rms = 0.0;
            auto coef = fit::polyfit(xs, ys, lead.degree, &rms);
            double lcoef = coef.back();
            double relc = std::fabs(lcoef - lead.lemma_value) / std::fabs(lead.lemma_value);
            detail += fmt("%s: deg %d/%d lead %.4f vs %.4f (%.0f%%); ", cs.name, deg, lead.degree,
                          lcoef, lead.lemma_value, 100.0 * relc);
            if (deg != lead.degree || !(relc < 0.15)) {
                ok = false;
                why = detail;
            }
        }
        gate.report(8, ok, "diagonal structure", ok ? detail : why, now_s() - t0);
    }

    // ==== 9. Poisson check ====
    if (gate.enabled(9)) {
        double t0 = now_s();
        double res = poisson_even_check(SmoothWindow::bump(0.5, 3.0), 100.0);
        gate.report(9, res < 1e-8, "Poisson check", fmt("residual %.1e", res), now_s() - t0);
    }

    // ==== 10. moment diagonal dominance ====
    if (gate.enabled(10)) {
        double t0 = now_s();
        bool ok = true;
        std::string why, detail;
        SmoothWindow u = SmoothWindow::bump(0.5, 1.0);
        double prev_ratio = 1e300;
        for (double K : {16.0, 24.0, 32.0, 40.0}) {
            auto rep = moment(delta, w16, K, u, gate.cache_dir);
            double ratio = std::fabs(rep.offdiag) / std::max(std::fabs(rep.total), 1e-300);
            detail += fmt("K=%g: ratio %.4f; ", K, ratio);
            if (!std::isfinite(ratio) || ratio > prev_ratio + 1e-12) {
                ok = false;
                why = detail + "(ratio not non-increasing)";
            }
            prev_ratio = ratio;
        }
        gate.report(10, ok, "moment diagonal dominance", ok ? detail : why, now_s() - t0);
    }

    // ==== 11. nonvanishing ====
    if (gate.enabled(11)) {
        double t0 = now_s();
        auto rep = nonvanishing_scan(delta, w16, 16, 40, 1e-8, gate.cache_dir);
        int weights_total = 0;
        for (int k = 16; k <= 40; k += 2)
            if (series::dim_cusp(k) >= 1) ++weights_total;
        int missing = (int)rep.weights_without.size();
        bool ok = missing <= 0.2 * weights_total;
        std::string detail =
            fmt("%zu witnesses over %d weights, %d without", rep.witnesses.size(), weights_total,
                missing);
        gate.report(11, ok, "nonvanishing", detail, now_s() - t0);
    }

    // ==== 12. shifted-convolution exponent ====
    if (gate.enabled(12)) {
        double t0 = now_s();
        bool ok = true;
        std::string why, detail;
        SmoothWindow W = SmoothWindow::plateau(0.5, 1.0, 2.0, 3.0);
        std::vector<std::int64_t> Ns;
        for (int p = 10; p <= 18; ++p) Ns.push_back(1ll << p);
        struct { const FormTable *f, *g; const char* name; } pairs[] = {
            {&delta, &delta, "DxD"}, {&delta, &e0_long, "DxE0"}, {&delta, &w16, "Dxw16"}};
        for (auto& pr : pairs) {
            for (std::int64_t h : {1, 2, 7}) {
                auto rep = shifted_exponent(*pr.f, *pr.g, h, Ns, W);
                detail += fmt("%s h=%lld: %.3f; ", pr.name, h, rep.slope);
                if (!(rep.slope <= 0.80)) {
                    ok = false;
                    why = detail + "(slope > 0.80)";
                }
            }
        }
        // decomposed-vs-direct within the certified defect at N <= 2^10
        for (std::int64_t N : {256, 1024}) {
            SmoothWindow V = SmoothWindow::plateau(0.4, 0.9, 2.2, 3.4);
            auto res = shifted_sum_decomposed(delta, delta, 1, N, W, V);
            if (!(std::fabs(res.value - res.direct) <= res.defect_bound + 1e-9)) {
                ok = false;
                why = fmt("decomposed defect exceeds certificate at N=%lld", N);
            }
        }
        gate.report(12, ok, "shifted-convolution exponent", ok ? detail : why, now_s() - t0);
    }

    printf("%d criterion failure(s)\n", gate.failures);
    return gate.failures;
}
