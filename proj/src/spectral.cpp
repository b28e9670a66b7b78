#include "rslab/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>

#include "rslab/arith.hpp"
#include "rslab/bessel.hpp"
#include "rslab/cache.hpp"
#include "rslab/lfunc.hpp"
#include "rslab/quad.hpp"
#include "rslab/series.hpp"

namespace rslab {

double petersson_geometric(std::int64_t m, std::int64_t n, int k, double tol) {
    if (m < 1 || n < 1 || k < 12 || k % 2 != 0)
        throw std::invalid_argument("petersson_geometric: need m,n >= 1 and even k >= 12");
    double sq = 4.0 * M_PI * std::sqrt((double)m * (double)n);
    // tail over c > c0 (where the Bessel argument is < 1/2):
    //   2 pi sum tau(c) c^{-1/2} (mn)^{1/4} (sq/c)^{k-1}
    // with tau(c) <= 2 sqrt(c):  4 pi (mn)^{1/4} sq^{k-1} c0^{1-k} c0 / (k-2)
    auto tail_bound = [&](double c0) {
        double logv = std::log(4.0 * M_PI) + 0.25 * std::log((double)m * (double)n) +
                      (k - 1) * std::log(sq) + (2.0 - k) * std::log(c0) - std::log(k - 2.0);
        return std::exp(logv);
    };
    double c0 = std::max(2.0 * sq, 16.0);  // argument < 1/2 beyond here
    while (tail_bound(c0) >= tol) {
        c0 *= 1.3;
        if (c0 > 1e6)
            throw std::runtime_error("petersson_geometric: tail criterion unreachable with c <= 1e6");
    }
    std::int64_t cmax = (std::int64_t)c0;
    double sign = (k % 4 == 0) ? 1.0 : -1.0;  // i^{-k}
    double s = (m == n) ? 1.0 : 0.0;
    double acc = 0.0;
    for (std::int64_t c = 1; c <= cmax; ++c) {
        double S = arith::kloosterman(m, n, c);
        if (S == 0.0) continue;
        double x = sq / (double)c;
        acc += S / (double)c * bessel_j(k - 1.0, x);
    }
    return s + 2.0 * M_PI * sign * acc;
}

HarmonicWeights solve_harmonic_weights(int k, std::vector<HeckeEigenform>& forms, int n_heldout) {
    int d = (int)forms.size();
    if (d < 1) throw std::invalid_argument("solve_harmonic_weights: no forms");
    HarmonicWeights out;
    out.k = k;
    // system: sum_g w_g lambda_g(n) = geometric(1,n), n = 1..d
    std::vector<std::vector<long double>> A(d, std::vector<long double>(d + 1, 0.0L));
    for (int row = 0; row < d; ++row) {
        std::int64_t n = row + 1;
        for (int j = 0; j < d; ++j) A[row][j] = forms[j].lam[n];
        A[row][d] = petersson_geometric(1, n, k, 1e-10);
    }
    // Gaussian elimination, partial pivoting; track conditioning crudely
    double minpiv = 1e300, maxpiv = 0.0;
    for (int col = 0; col < d; ++col) {
        int best = col;
        for (int i = col + 1; i < d; ++i)
            if (std::fabs((double)A[i][col]) > std::fabs((double)A[best][col])) best = i;
        std::swap(A[best], A[col]);
        double piv = std::fabs((double)A[col][col]);
        minpiv = std::min(minpiv, piv);
        maxpiv = std::max(maxpiv, piv);
        if (piv == 0.0 || maxpiv / minpiv > 1e8)
            throw std::runtime_error("solve_harmonic_weights: system condition number > 1e8");
        for (int i = 0; i < d; ++i) {
            if (i == col) continue;
            long double f = A[i][col] / A[col][col];
            for (int j = col; j <= d; ++j) A[i][j] -= f * A[col][j];
        }
    }
    out.omega_inv.resize(d);
    for (int i = 0; i < d; ++i) {
        out.omega_inv[i] = (double)(A[i][d] / A[i][i]);
        if (!(out.omega_inv[i] > 0.0))
            throw std::runtime_error("solve_harmonic_weights: nonpositive weight");
        forms[i].omega_inv = out.omega_inv[i];
    }
    // held-out verification on pairs (m,n), both > 1
    double worst = 0.0;
    int checked = 0;
    for (std::int64_t m = 2; checked < n_heldout && m <= 30; ++m) {
        for (std::int64_t n = m; checked < n_heldout && n <= 30; n += 3) {
            if (forms[0].n_max() < m || forms[0].n_max() < n) continue;
            double lhs = 0.0;
            for (int j = 0; j < d; ++j) lhs += out.omega_inv[j] * forms[j].lam[m] * forms[j].lam[n];
            double rhs = petersson_geometric(m, n, k, 1e-10);
            double den = std::max({std::fabs(lhs), std::fabs(rhs), 1e-3});
            worst = std::max(worst, std::fabs(lhs - rhs) / den);
            ++checked;
        }
    }
    out.heldout_residual = worst;
    if (worst >= 1e-6)
        throw std::runtime_error("solve_harmonic_weights: held-out verification residual >= 1e-6");
    return out;
}

BesselAverage bessel_k_average(const SmoothWindow& gwin, double x) {
    BesselAverage out;
    if (x < 0.0) throw std::invalid_argument("bessel_k_average: x >= 0");
    // spectral side
    int klo = std::max(2, 2 * (int)std::floor((gwin.lo() + 1.0) / 2.0) - 2);
    int khi = 2 * (int)std::ceil((gwin.hi() + 1.0) / 2.0) + 2;
    for (int k = klo; k <= khi; k += 2) {
        double g = gwin(k - 1.0);
        if (g == 0.0) continue;
        double s = (k % 4 == 0) ? 1.0 : -1.0;  // i^k for even k
        out.sum_side += s * g * bessel_j(k - 1.0, x);
    }
    // integral side: F(x) = -int ghat(t) sin(x cos 2pi t) dt, the sign fixed
    // by the Neumann expansion sin z = 2 sum_j (-1)^j J_{2j+1}(z)
    auto ghat = [&](double t) {
        auto f = [&](double xi) {
            return std::complex<double>(gwin(xi), 0.0) *
                   std::exp(std::complex<double>(0.0, 2.0 * M_PI * t * xi));
        };
        int panels = (int)(std::fabs(t) * (gwin.hi() - gwin.lo()) / 3.0) + 6;
        return quad::gl_composite(f, gwin.lo(), gwin.hi(), panels, 16);
    };
    // |ghat| decays once t >> 1/(support scale); march out in blocks.
    // dt must resolve both sin(x cos 2 pi t) and ghat's own oscillation at
    // frequency ~ sup supp(gwin)
    double integral = 0.0;
    double dt = 1.0 / (10.0 * (x / (2.0 * M_PI) + gwin.hi() + 2.0));
    auto term = [&](double t) { return (ghat(t) * std::sin(x * std::cos(2.0 * M_PI * t))).real(); };
    double t = 0.0;
    double block = 0.25;
    int quiet = 0;
    // trapezoid marching symmetric in t (ghat(-t) = conj, integrand real-symmetrized)
    integral += term(0.0) * dt;
    for (int b = 0; b < 400 && quiet < 3; ++b) {
        double blockmax = 0.0;
        for (double tt = t + dt; tt <= t + block + 1e-15; tt += dt) {
            double v = term(tt) + term(-tt);
            integral += v * dt;
            blockmax = std::max(blockmax, std::fabs(v));
        }
        t += block;
        if (blockmax < 1e-13) ++quiet;
        else quiet = 0;
    }
    out.integral_side = -integral;
    out.diff = out.sum_side - out.integral_side;
    return out;
}

double poisson_even_check(const SmoothWindow& u, double K) {
    double s = 0.0;
    int klo = (int)std::floor(u.lo() * K + 1.0) - 4;
    int khi = (int)std::ceil(u.hi() * K + 1.0) + 4;
    if (klo % 2 != 0) --klo;
    for (int k = std::max(2, klo); k <= khi; k += 2) s += u((k - 1.0) / K);
    return std::fabs(4.0 * s - 2.0 * K * u.integral());
}

MomentReport moment(const FormTable& f, const FormTable& h, double K, const SmoothWindow& u,
                    const std::string& cache_dir, double eps) {
    MomentReport rep;
    rep.K = K;
    rep.conjugate_pair = (f.label() == h.label());
    int klo = (int)std::floor(u.lo() * K + 1.0) - 2;
    int khi = (int)std::ceil(u.hi() * K + 1.0) + 2;
    if (klo % 2 != 0) --klo;
    std::vector<std::string> missing;
    for (int k = std::max(12, klo); k <= khi; k += 2) {
        double win = u((k - 1.0) / K);
        if (win == 0.0) continue;
        int d = series::dim_cusp(k);
        double dk_win = 0.0;
        if (d > 0) {
            // table length demanded by the certified AFE cutoffs
            std::int64_t need = std::max(afe_weight_for(k, f.gamma_ell()).certified_mcut(eps),
                                         afe_weight_for(k, h.gamma_ell()).certified_mcut(eps));
            auto forms = cache::cached_eigenforms(k, need, cache_dir);
            solve_harmonic_weights(k, forms);
            for (auto& g : forms) {
                FormTable tg = table_of(g);
                MomentRow row;
                row.k = k;
                row.index = g.index;
                row.omega_inv = *g.omega_inv;
                row.lf = central_lvalue(f, tg, eps).value;
                row.lh = central_lvalue(h, tg, eps).value;
                row.window = win;
                rep.rows.push_back(row);
            }
        }
        (void)dk_win;
    }
    // fixed-order reductions
    for (const auto& r : rep.rows) rep.total += r.window * r.omega_inv * r.lf * r.lh;
    for (int k = std::max(12, klo); k <= khi; k += 2) {
        double win = u((k - 1.0) / K);
        if (win == 0.0) continue;
        rep.diagonal += 4.0 * win * diagonal_dk(f, h, k, eps).value;
    }
    rep.offdiag = rep.total - rep.diagonal;
    return rep;
}

NonvanishingReport nonvanishing_scan(const FormTable& f, const FormTable& h, int k_lo, int k_hi,
                                     double threshold, const std::string& cache_dir) {
    NonvanishingReport rep;
    for (int k = k_lo + (k_lo % 2); k <= k_hi; k += 2) {
        if (k < 12 || series::dim_cusp(k) == 0) {
            rep.weights_skipped.push_back(k);
            continue;
        }
        std::int64_t need = std::max(afe_weight_for(k, f.gamma_ell()).certified_mcut(1e-8),
                                     afe_weight_for(k, h.gamma_ell()).certified_mcut(1e-8));
        auto forms = cache::cached_eigenforms(k, need, cache_dir);
        bool found = false;
        for (auto& g : forms) {
            FormTable tg = table_of(g);
            double prod = central_lvalue(f, tg).value * central_lvalue(h, tg).value;
            if (std::fabs(prod) > threshold) {
                rep.witnesses.push_back({k, g.index, prod});
                found = true;
            }
        }
        if (!found) rep.weights_without.push_back(k);
    }
    return rep;
}

}  // namespace rslab
