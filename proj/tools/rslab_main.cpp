// rslab: batch front-end for the Rankin-Selberg / trace-formula laboratory.
//
// Subcommands run one experiment each and write a JSON report (plus CSV
// tables where rows are natural).  Exit codes: 0 pass, 1 check failed,
// 2 usage/config error, 3 numeric-range error.

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <random>

#include "rslab/arith.hpp"
#include "rslab/bessel.hpp"
#include "rslab/cache.hpp"
#include "rslab/circle.hpp"
#include "rslab/fit.hpp"
#include "rslab/forms.hpp"
#include "rslab/lfunc.hpp"
#include "rslab/parallel.hpp"
#include "rslab/phase.hpp"
#include "rslab/report.hpp"
#include "rslab/series.hpp"
#include "rslab/spectral.hpp"
#include "rslab/voronoi.hpp"

using namespace rslab;
using report::fmt17;
using report::Json;

namespace {

struct Ctx {
    std::string cache_dir;
    std::string output;
    std::uint64_t seed = 12345;
    int jobs = 0;
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();

    double elapsed() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
    report::RunConfig config(const std::string& cmd,
                             std::vector<std::pair<std::string, std::string>> params) const {
        report::RunConfig c;
        c.command = cmd;
        c.params = std::move(params);
        c.output_path = output;
        c.cache_dir = cache_dir;
        c.seed = seed;
        c.jobs = jobs;
        return c;
    }
};

// selector grammar: wK:i | E:r | maass:path
FormTable parse_form(const std::string& sel, std::int64_t n_max, const std::string& cache_dir) {
    if (sel.rfind("maass:", 0) == 0) return maass_table(load_maass_file(sel.substr(6)));
    if (sel.rfind("E:", 0) == 0) {
        FormTable proto;
        proto.kind = FormTable::Kind::kEisenstein;
        proto.r = std::stod(sel.substr(2));
        return cache::get_or_build(proto, n_max, cache_dir);
    }
    if (sel[0] == 'w') {
        auto colon = sel.find(':');
        if (colon == std::string::npos) throw CLI::ValidationError("form selector needs wK:i");
        FormTable proto;
        proto.kind = FormTable::Kind::kHolomorphic;
        proto.weight = std::stoi(sel.substr(1, colon - 1));
        proto.index = std::stoi(sel.substr(colon + 1));
        return cache::get_or_build(proto, n_max, cache_dir);
    }
    throw CLI::ValidationError("unrecognized form selector: " + sel);
}

// table length needed so central L-values at averaged weight <= k_hi certify
std::int64_t lvalue_range(int ell_f, int ell_h, int k_hi, double eps = 1e-8) {
    std::int64_t need = 1;
    for (int k = 12; k <= k_hi; k += 2) {
        if (series::dim_cusp(k) == 0) continue;
        need = std::max(need, afe_weight_for(k, ell_f).certified_mcut(eps));
        need = std::max(need, afe_weight_for(k, ell_h).certified_mcut(eps));
    }
    return need;
}

int sel_ell(const std::string& sel) {
    if (sel[0] == 'w') return std::stoi(sel.substr(1, sel.find(':') - 1));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"rslab: Rankin-Selberg moment & shifted-convolution laboratory"};
    app.set_config("--config", "", "key=value configuration file (flags win)");
    app.require_subcommand(1);

    Ctx ctx;
    app.add_option("--cache", ctx.cache_dir, "coefficient cache directory")->configurable(true);
    app.add_option("--out", ctx.output, "JSON report path");
    app.add_option("--seed", ctx.seed, "seed for sampled property checks");
    app.add_option("--jobs", ctx.jobs, "worker cap (0 = hardware)")
        ->each([](const std::string& s) { set_max_jobs(std::stoi(s)); });

    int rc = 0;
    auto fail = [&](int code) { rc = std::max(rc, code); };

    // ---- coeffs ----
    auto* c_coeffs = app.add_subcommand("coeffs", "generate and cache eigenform tables");
    int co_weight = 12;
    std::int64_t co_nmax = 1000;
    double co_eis = std::nan("");
    c_coeffs->add_option("--weight", co_weight);
    c_coeffs->add_option("--nmax", co_nmax);
    c_coeffs->add_option("--eis", co_eis, "generate an Eisenstein table for this r instead");
    c_coeffs->callback([&] {
        Json payload;
        if (!std::isnan(co_eis)) {
            FormTable t = eisenstein_table(co_eis, co_nmax);
            if (!ctx.cache_dir.empty()) cache::save(t, ctx.cache_dir);
            payload["tables"] = Json::array({t.label()});
        } else {
            auto forms = cache::cached_eigenforms(co_weight, co_nmax, ctx.cache_dir);
            Json arr = Json::array();
            for (const auto& g : forms) {
                arr.push_back(Json{{"label", table_of(g).label()},
                                   {"lambda2", fmt17(g.lam.size() > 2 ? g.lam[2] : 0.0)},
                                   {"nmax", g.n_max()}});
            }
            payload["tables"] = arr;
        }
        report::emit(ctx.config("coeffs", {{"weight", std::to_string(co_weight)},
                                           {"nmax", std::to_string(co_nmax)}}),
                     payload, ctx.elapsed());
    });

    // ---- kloosterman-table ----
    auto* c_kl = app.add_subcommand("kloosterman-table", "S(m,n;c) values and Weil margins");
    std::int64_t kl_m = 1, kl_n = 1, kl_cmax = 100;
    c_kl->add_option("--m", kl_m);
    c_kl->add_option("--n", kl_n);
    c_kl->add_option("--cmax", kl_cmax);
    c_kl->callback([&] {
        Json rows = Json::array();
        std::vector<std::vector<std::string>> csv;
        bool ok = true;
        for (std::int64_t c = 1; c <= kl_cmax; ++c) {
            double s = arith::kloosterman(kl_m, kl_n, c);
            double margin = arith::weil_bound_margin(kl_m, kl_n, c);
            if (margin < -1e-9) ok = false;
            rows.push_back(Json{{"c", c}, {"S", fmt17(s)}, {"weil_margin", fmt17(margin)}});
            csv.push_back({std::to_string(c), fmt17(s), fmt17(margin)});
        }
        Json payload{{"rows", rows}, {"weil_ok", ok}};
        auto doc = report::emit(ctx.config("kloosterman-table",
                                           {{"m", std::to_string(kl_m)},
                                            {"n", std::to_string(kl_n)},
                                            {"cmax", std::to_string(kl_cmax)}}),
                                payload, ctx.elapsed());
        if (!ctx.output.empty()) report::write_csv(ctx.output + ".csv", {"c", "S", "weil_margin"}, csv);
        if (!ok) fail(1);
        printf("kloosterman-table: %lld rows, weil_ok=%d\n", (long long)kl_cmax, (int)ok);
    });

    // ---- trace-check ----
    auto* c_tr = app.add_subcommand("trace-check", "Petersson weights + held-out residuals");
    int tr_k = 12;
    c_tr->add_option("--k", tr_k);
    c_tr->callback([&] {
        auto forms = cache::cached_eigenforms(tr_k, 2000, ctx.cache_dir);
        if (forms.empty()) {
            printf("trace-check: dim S_%d = 0, geometric side |.| = %.3e\n", tr_k,
                   std::fabs(petersson_geometric(1, 1, tr_k, 1e-10) - 1.0));
            report::emit(ctx.config("trace-check", {{"k", std::to_string(tr_k)}}),
                         Json{{"dim", 0}}, ctx.elapsed());
            return;
        }
        auto w = solve_harmonic_weights(tr_k, forms);
        Json arr = Json::array();
        for (size_t i = 0; i < forms.size(); ++i)
            arr.push_back(Json{{"index", (int)i}, {"omega_inv", fmt17(w.omega_inv[i])}});
        Json payload{{"weights", arr}, {"heldout_residual", fmt17(w.heldout_residual)}};
        report::emit(ctx.config("trace-check", {{"k", std::to_string(tr_k)}}), payload,
                     ctx.elapsed());
        printf("trace-check k=%d: heldout residual %.3e\n", tr_k, w.heldout_residual);
        if (w.heldout_residual >= 1e-6) fail(1);
    });

    // ---- voronoi-check ----
    auto* c_vor = app.add_subcommand("voronoi-check", "two-sided Voronoi identity residual");
    std::string vo_f = "w12:0";
    std::int64_t vo_a = 1, vo_c = 1;
    double vo_lo = 500, vo_hi = 1000;
    c_vor->add_option("--f", vo_f);
    c_vor->add_option("--a", vo_a);
    c_vor->add_option("--c", vo_c);
    c_vor->add_option("--win-lo", vo_lo);
    c_vor->add_option("--win-hi", vo_hi);
    c_vor->callback([&] {
        FormTable f = parse_form(vo_f, (std::int64_t)(vo_hi * 2) + 64, ctx.cache_dir);
        auto F = SmoothWindow::bump(vo_lo, vo_hi);
        auto res = voronoi_identity_check(f, vo_a, vo_c, F);
        Json payload{{"lhs_re", fmt17(res.lhs.real())},   {"lhs_im", fmt17(res.lhs.imag())},
                     {"rhs_re", fmt17(res.rhs.real())},   {"rhs_im", fmt17(res.rhs.imag())},
                     {"polar_re", fmt17(res.polar.real())}, {"residual", fmt17(res.residual)},
                     {"dual_terms", res.dual_terms},      {"scale", fmt17(res.scale)}};
        report::emit(ctx.config("voronoi-check", {{"f", vo_f},
                                                  {"a", std::to_string(vo_a)},
                                                  {"c", std::to_string(vo_c)}}),
                     payload, ctx.elapsed());
        printf("voronoi-check %s a=%lld c=%lld: residual %.3e (%d dual terms)\n", vo_f.c_str(),
               (long long)vo_a, (long long)vo_c, res.residual, res.dual_terms);
        if (!(res.residual < 1e-5)) fail(1);
    });

    // ---- afe-lvalue ----
    auto* c_afe = app.add_subcommand("afe-lvalue", "central Rankin-Selberg value via the AFE");
    std::string af_f = "w12:0", af_g = "w16:0";
    c_afe->add_option("--f", af_f);
    c_afe->add_option("--g", af_g, "averaged holomorphic form wK:i");
    c_afe->callback([&] {
        int kg = sel_ell(af_g);
        std::int64_t need = afe_weight_for(kg, sel_ell(af_f)).certified_mcut(1e-8);
        FormTable f = parse_form(af_f, need, ctx.cache_dir);
        FormTable g = parse_form(af_g, need, ctx.cache_dir);
        auto L = central_lvalue(f, g);
        Json payload{{"L", fmt17(L.value)},
                     {"trunc_bound", fmt17(L.trunc_bound)},
                     {"terms", L.terms}};
        report::emit(ctx.config("afe-lvalue", {{"f", af_f}, {"g", af_g}}), payload, ctx.elapsed());
        printf("L(1/2, %s x %s) = %.12f  (tail < %.2e, %lld terms)\n", af_f.c_str(), af_g.c_str(),
               L.value, L.trunc_bound, (long long)L.terms);
    });

    // ---- diagonal ----
    auto* c_diag = app.add_subcommand("diagonal", "D_k sweep and log-polynomial fit");
    std::string dg_f = "w12:0", dg_h = "w16:0";
    int dg_klo = 20, dg_khi = 120;
    c_diag->add_option("--f", dg_f);
    c_diag->add_option("--h", dg_h);
    c_diag->add_option("--kmin", dg_klo);
    c_diag->add_option("--kmax", dg_khi);
    c_diag->callback([&] {
        // D_k needs fixed-form tables only
        std::int64_t need = 1 << 18;
        FormTable f = parse_form(dg_f, need, ctx.cache_dir);
        FormTable h = parse_form(dg_h, need, ctx.cache_dir);
        std::vector<double> xs, ys;
        Json rows = Json::array();
        std::vector<std::vector<std::string>> csv;
        for (int k = dg_klo + (dg_klo % 2); k <= dg_khi; k += 2) {
            auto d = diagonal_dk(f, h, k);
            xs.push_back(std::log((double)k));
            ys.push_back(d.value);
            rows.push_back(Json{{"k", k}, {"D_k", fmt17(d.value)}, {"tail", fmt17(d.tail_bound)}});
            csv.push_back({std::to_string(k), fmt17(d.value), fmt17(d.tail_bound)});
        }
        std::vector<double> ladder;
        int deg = fit::pick_degree(xs, ys, 7, 0.10, &ladder);
        auto lead = leading_constant(f, h);
        double rms;
        auto coef = fit::polyfit(xs, ys, lead.degree, &rms);
        Json payload{{"rows", rows},
                     {"fitted_degree", deg},
                     {"expected_degree", lead.degree},
                     {"leading_coeff", fmt17(coef.back())},
                     {"lemma_constant", fmt17(lead.lemma_value)},
                     {"theorem_constant", fmt17(lead.theorem_value)},
                     {"case", lead.kase}};
        report::emit(ctx.config("diagonal", {{"f", dg_f}, {"h", dg_h}}), payload, ctx.elapsed());
        printf("diagonal %s x %s: fitted degree %d (expected %d), leading %.6f vs constant %.6f\n",
               dg_f.c_str(), dg_h.c_str(), deg, lead.degree, coef.back(), lead.lemma_value);
        if (!ctx.output.empty()) report::write_csv(ctx.output + ".csv", {"k", "D_k", "tail"}, csv);
        if (deg != lead.degree) fail(1);
    });

    // ---- moment ----
    auto* c_mom = app.add_subcommand("moment", "harmonic moment I(K) vs diagonal");
    std::string mo_f = "w12:0", mo_h = "w16:0";
    double mo_K = 24;
    double mo_wlo = 0.5, mo_whi = 1.0;
    c_mom->add_option("--f", mo_f);
    c_mom->add_option("--h", mo_h);
    c_mom->add_option("--K", mo_K);
    c_mom->add_option("--window-lo", mo_wlo);
    c_mom->add_option("--window-hi", mo_whi);
    c_mom->callback([&] {
        int khi = (int)std::ceil(mo_whi * mo_K + 1.0) + 2;
        std::int64_t need = lvalue_range(sel_ell(mo_f), sel_ell(mo_h), khi);
        FormTable f = parse_form(mo_f, need, ctx.cache_dir);
        FormTable h = parse_form(mo_h, need, ctx.cache_dir);
        auto u = SmoothWindow::bump(mo_wlo, mo_whi);
        auto rep = moment(f, h, mo_K, u, ctx.cache_dir);
        Json rows = Json::array();
        std::vector<std::vector<std::string>> csv;
        for (const auto& r : rep.rows) {
            rows.push_back(Json{{"k", r.k},
                                {"index", r.index},
                                {"omega_inv", fmt17(r.omega_inv)},
                                {"Lf", fmt17(r.lf)},
                                {"Lh", fmt17(r.lh)},
                                {"u", fmt17(r.window)}});
            csv.push_back({std::to_string(r.k), std::to_string(r.index), fmt17(r.omega_inv),
                           fmt17(r.lf), fmt17(r.lh), fmt17(r.window)});
        }
        Json payload{{"rows", rows},
                     {"total", fmt17(rep.total)},
                     {"diagonal", fmt17(rep.diagonal)},
                     {"offdiag", fmt17(rep.offdiag)},
                     {"conjugate_pair", rep.conjugate_pair}};
        report::emit(ctx.config("moment", {{"f", mo_f}, {"h", mo_h}, {"K", fmt17(mo_K)}}), payload,
                     ctx.elapsed());
        if (!ctx.output.empty())
            report::write_csv(ctx.output + ".csv", {"k", "index", "omega_inv", "Lf", "Lh", "u"}, csv);
        printf("moment K=%g: I = %.9f, diagonal = %.9f, offdiag = %.3e\n", mo_K, rep.total,
               rep.diagonal, rep.offdiag);
    });

    // ---- nonvanishing ----
    auto* c_nv = app.add_subcommand("nonvanishing", "simultaneous nonvanishing scan");
    std::string nv_f = "w12:0", nv_h = "w16:0";
    int nv_klo = 16, nv_khi = 40;
    double nv_thr = 1e-8;
    c_nv->add_option("--f", nv_f);
    c_nv->add_option("--h", nv_h);
    c_nv->add_option("--kmin", nv_klo);
    c_nv->add_option("--kmax", nv_khi);
    c_nv->add_option("--threshold", nv_thr);
    c_nv->callback([&] {
        std::int64_t need = lvalue_range(sel_ell(nv_f), sel_ell(nv_h), nv_khi);
        FormTable f = parse_form(nv_f, need, ctx.cache_dir);
        FormTable h = parse_form(nv_h, need, ctx.cache_dir);
        auto rep = nonvanishing_scan(f, h, nv_klo, nv_khi, nv_thr, ctx.cache_dir);
        Json wit = Json::array();
        for (const auto& w : rep.witnesses)
            wit.push_back(Json{{"k", w.k}, {"index", w.index}, {"product", fmt17(w.product)}});
        Json payload{{"witnesses", wit},
                     {"weights_without", rep.weights_without},
                     {"weights_skipped", rep.weights_skipped}};
        report::emit(ctx.config("nonvanishing", {{"f", nv_f}, {"h", nv_h}}), payload, ctx.elapsed());
        printf("nonvanishing k in [%d,%d]: %zu witnesses, %zu weights without\n", nv_klo, nv_khi,
               rep.witnesses.size(), rep.weights_without.size());
    });

    // ---- delta-check ----
    auto* c_delta = app.add_subcommand("delta-check", "DFI delta-symbol exactness");
    std::int64_t de_M = 400;
    c_delta->add_option("--M", de_M);
    c_delta->callback([&] {
        DeltaDecomposition dd(de_M);
        std::int64_t worst_n = 0;
        double worst = dd.worst_defect(0, &worst_n);
        auto props = g_properties_check(dd);
        Json payload{{"M", de_M},
                     {"Q", fmt17(dd.Q())},
                     {"worst_defect", fmt17(worst)},
                     {"worst_n", worst_n},
                     {"l1l2_over_log2Q", fmt17(props.l1l2_over_log2q)},
                     {"flatness_small_qu", fmt17(props.flatness_small_qu)},
                     {"tail_at_10", fmt17(props.tail_decay_at_10)}};
        report::emit(ctx.config("delta-check", {{"M", std::to_string(de_M)}}), payload,
                     ctx.elapsed());
        printf("delta-check M=%lld: worst |delta - [n=0]| = %.3e at n=%lld (pass=%d)\n",
               (long long)de_M, worst, (long long)worst_n, worst < 1e-6);
        if (!(worst < 1e-6)) fail(1);
    });

    // ---- shifted-sum ----
    auto* c_ss = app.add_subcommand("shifted-sum", "direct vs delta-decomposed shifted sum");
    std::string ss_f = "w12:0", ss_g = "w12:0";
    std::int64_t ss_h = 1, ss_N = 256;
    c_ss->add_option("--f", ss_f);
    c_ss->add_option("--g", ss_g);
    c_ss->add_option("--shift", ss_h);
    c_ss->add_option("--N", ss_N);
    c_ss->callback([&] {
        FormTable f = parse_form(ss_f, 4 * ss_N + ss_h + 8, ctx.cache_dir);
        FormTable g = parse_form(ss_g, 4 * ss_N + ss_h + 8, ctx.cache_dir);
        auto W = SmoothWindow::plateau(0.5, 1.0, 2.0, 3.0);
        auto V = SmoothWindow::plateau(0.4, 0.9, 2.2, 3.4);
        auto res = shifted_sum_decomposed(f, g, ss_h, ss_N, W, V);
        Json payload{{"direct", fmt17(res.direct)},
                     {"decomposed", fmt17(res.value)},
                     {"defect_bound", fmt17(res.defect_bound)},
                     {"M", res.M}};
        report::emit(ctx.config("shifted-sum", {{"f", ss_f}, {"g", ss_g}}), payload, ctx.elapsed());
        printf("shifted-sum N=%lld h=%lld: direct %.9f decomposed %.9f (|diff| %.2e, bound %.2e)\n",
               (long long)ss_N, (long long)ss_h, res.direct, res.value,
               std::fabs(res.direct - res.value), res.defect_bound);
        if (!(std::fabs(res.direct - res.value) <= res.defect_bound + 1e-9)) fail(1);
    });

    // ---- shifted-exponent ----
    auto* c_se = app.add_subcommand("shifted-exponent", "fitted growth exponent of S(N)");
    std::string se_f = "w12:0", se_g = "w12:0";
    std::int64_t se_h = 1;
    int se_plo = 10, se_phi = 18;
    c_se->add_option("--f", se_f);
    c_se->add_option("--g", se_g);
    c_se->add_option("--shift", se_h);
    c_se->add_option("--pow-lo", se_plo);
    c_se->add_option("--pow-hi", se_phi);
    c_se->callback([&] {
        std::vector<std::int64_t> Ns;
        for (int p = se_plo; p <= se_phi; ++p) Ns.push_back(1ll << p);
        FormTable f = parse_form(se_f, 3 * Ns.back() + se_h + 8, ctx.cache_dir);
        FormTable g = parse_form(se_g, 3 * Ns.back() + se_h + 8, ctx.cache_dir);
        auto W = SmoothWindow::plateau(0.5, 1.0, 2.0, 3.0);
        auto rep = shifted_exponent(f, g, se_h, Ns, W);
        Json rows = Json::array();
        for (size_t i = 0; i < rep.N.size(); ++i)
            rows.push_back(Json{{"N", rep.N[i]}, {"S", fmt17(rep.S[i])}});
        Json payload{{"rows", rows},
                     {"slope", fmt17(rep.slope)},
                     {"fit_residual", fmt17(rep.residual)},
                     {"used_points", rep.used_points}};
        report::emit(ctx.config("shifted-exponent", {{"f", se_f}, {"g", se_g}}), payload,
                     ctx.elapsed());
        printf("shifted-exponent %s x %s h=%lld: slope %.4f (rms %.3f)\n", se_f.c_str(),
               se_g.c_str(), (long long)se_h, rep.slope, rep.residual);
    });

    // ---- phase-check ----
    auto* c_ph = app.add_subcommand("phase-check", "stationary phase vs Gaussian-Fresnel");
    double ph_y = 100.0;
    int ph_order = 3;
    c_ph->add_option("--y", ph_y);
    c_ph->add_option("--order", ph_order);
    c_ph->callback([&] {
        // omega = e^{-t^2} (windowed far out), h = y t^2/(2 pi):
        // int e^{iyt^2} e^{-t^2} dt = sqrt(pi/(1-iy))
        double y = ph_y;
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
        auto sp = stationary_phase_eval(p, ph_order);
        std::complex<double> closed = std::sqrt(M_PI / std::complex<double>(1.0, -y));
        double rel = std::abs(sp.value - closed) / std::abs(closed);
        Json payload{{"sp_re", fmt17(sp.value.real())},
                     {"sp_im", fmt17(sp.value.imag())},
                     {"closed_re", fmt17(closed.real())},
                     {"closed_im", fmt17(closed.imag())},
                     {"rel_error", fmt17(rel)}};
        report::emit(ctx.config("phase-check", {{"y", fmt17(ph_y)}}), payload, ctx.elapsed());
        printf("phase-check y=%g order=%d: rel error vs closed form %.3e\n", ph_y, ph_order, rel);
        if (!(rel < 1e-4)) fail(1);
    });

    // ---- poisson-check ----
    auto* c_po = app.add_subcommand("poisson-check", "even-weight Poisson residual");
    double po_K = 100.0;
    c_po->add_option("--K", po_K);
    c_po->callback([&] {
        auto u = SmoothWindow::bump(1.0, 2.0);
        double res = poisson_even_check(u, po_K);
        report::emit(ctx.config("poisson-check", {{"K", fmt17(po_K)}}),
                     Json{{"residual", fmt17(res)}}, ctx.elapsed());
        printf("poisson-check K=%g: residual %.3e\n", po_K, res);
        if (!(res < 1e-6)) fail(1);
    });

    // ---- cache-admin ----
    auto* c_ca = app.add_subcommand("cache-admin", "list / verify / purge the coefficient cache");
    std::string ca_action = "list";
    c_ca->add_option("action", ca_action)->check(CLI::IsMember({"list", "verify", "purge"}));
    c_ca->callback([&] {
        Json payload;
        if (ca_action == "list") {
            payload["files"] = cache::list_dir(ctx.cache_dir);
            for (const auto& fname : cache::list_dir(ctx.cache_dir)) printf("%s\n", fname.c_str());
        } else if (ca_action == "verify") {
            Json arr = Json::array();
            bool all_ok = true;
            for (const auto& r : cache::verify_dir(ctx.cache_dir)) {
                arr.push_back(Json{{"file", r.file},
                                   {"ok", r.ok},
                                   {"residual", fmt17(r.residual)},
                                   {"message", r.message}});
                printf("%-60s %s (residual %.2e)\n", r.file.c_str(), r.ok ? "ok" : "CORRUPT",
                       r.residual);
                all_ok = all_ok && r.ok;
            }
            payload["results"] = arr;
            if (!all_ok) fail(1);
        } else {
            payload["purged"] = cache::purge_dir(ctx.cache_dir);
        }
        report::emit(ctx.config("cache-admin", {{"action", ca_action}}), payload, ctx.elapsed());
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::invalid_argument& e) {
        fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::domain_error& e) {
        fprintf(stderr, "numeric-range error: %s\n", e.what());
        return 3;
    } catch (const std::exception& e) {
        fprintf(stderr, "error: %s\n", e.what());
        return 3;
    }
    return rc;
}
