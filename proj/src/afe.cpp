#include "rslab/afe.hpp"

#include <cmath>
#include <complex>
#include <map>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "rslab/gamma.hpp"

namespace rslab {

using Cplx = std::complex<double>;

struct AfeWeight::Impl {
    // contour samples u_t = A + i t_j, coefficients c_j = w_j e^{u^2} R(u)/u
    std::vector<double> tj;
    std::vector<Cplx> cj;
    // grid in log y
    double ln_lo = 0.0, ln_hi = 0.0, dln = 0.01;
    std::vector<double> grid;
    double bounds[17] = {0};
};

namespace {

// trapezoid samples of the contour integrand coefficients at Re u = A
void contour_coeffs(int k, int ell, double A, double T, double h, std::vector<double>& tj,
                    std::vector<Cplx>& cj) {
    int n = (int)std::ceil(2 * T / h);
    tj.resize(n + 1);
    cj.resize(n + 1);
    for (int j = 0; j <= n; ++j) {
        double t = -T + j * (2 * T / n);
        Cplx u(A, t);
        Cplx val = std::exp(u * u) * gamma_ratio(u, k, ell) / u;
        double w = (j == 0 || j == n) ? 0.5 : 1.0;
        tj[j] = t;
        cj[j] = val * (w * (2 * T / n) / (2.0 * M_PI));
    }
}

// explicit bound for sum_{m>M} d3(m) m^{-beta}, beta > 1, via
// D3(x) <= x (1 + ln x)^2 and partial summation
double d3_tail(double M, double beta) {
    double L = 1.0 + std::log(M);
    double bm1 = beta - 1.0;
    return beta * std::pow(M, -bm1) / bm1 * (L * L + 2.0 * L / bm1 + 2.0 / (bm1 * bm1));
}

}  // namespace

AfeWeight::AfeWeight(int k, int ell, double contour, double height)
    : k_(k), ell_(std::abs(ell)), contour_(contour), height_(height), impl_(new Impl) {
    if (k_ < 4) throw std::invalid_argument("AfeWeight: k too small");
    // symmetric in (k, ell): the gamma factor uses (k+l)/2-1 and |k-l|/2
    int kk = std::max(k_, ell_), ll = std::min(k_, ell_);
    contour_coeffs(kk, ll, contour_, height_, 0.02, impl_->tj, impl_->cj);
    // contour bounds B_A for A = 1..16
    for (int A = 1; A <= 16; ++A) {
        std::vector<double> tj;
        std::vector<Cplx> cj;
        contour_coeffs(kk, ll, (double)A, height_, 0.02, tj, cj);
        double s = 0.0;
        for (const auto& c : cj) s += std::abs(c);
        impl_->bounds[A] = s;
    }
    // log-y grid: from U ~ 1 region to deep decay
    double kt2 = std::max((double)(k_ * k_ - ell_ * ell_), 24.0) / (16.0 * M_PI * M_PI);
    impl_->ln_lo = std::log(kt2) - 16.0;
    impl_->ln_hi = std::log(kt2) + 13.0;  // X ~ 4.4e5: envelope < 1e-13 there
    impl_->dln = 0.01;
    int npts = (int)std::ceil((impl_->ln_hi - impl_->ln_lo) / impl_->dln) + 1;
    impl_->grid.resize(npts);
    for (int i = 0; i < npts; ++i) {
        double y = std::exp(impl_->ln_lo + i * impl_->dln);
        impl_->grid[i] = direct(y);
    }
}

double AfeWeight::direct(double y, double* imag_resid) const {
    if (!(y > 0.0)) throw std::domain_error("afe_weight: y must be > 0");
    Cplx s(0.0, 0.0);
    double lny = std::log(y);
    const auto& tj = impl_->tj;
    const auto& cj = impl_->cj;
    // y^{-u} = e^{-A ln y} e^{-i t ln y}
    double amp = std::exp(-contour_ * lny);
    // phase stepping over the uniform t-grid
    double h = tj[1] - tj[0];
    Cplx rot = std::exp(Cplx(0.0, -h * lny));
    Cplx ph = std::exp(Cplx(0.0, -tj[0] * lny));
    for (size_t j = 0; j < tj.size(); ++j) {
        s += cj[j] * ph;
        ph *= rot;
    }
    s *= amp;
    if (imag_resid) *imag_resid = std::fabs(s.imag());
    return s.real();
}

double AfeWeight::operator()(double y) const {
    if (!(y > 0.0)) throw std::domain_error("afe_weight: y must be > 0");
    double lny = std::log(y);
    const auto& I = *impl_;
    if (lny <= I.ln_lo) return I.grid.front();  // U flattens to 1 leftward
    if (lny >= I.ln_hi) return 0.0;             // envelope < 1e-30 beyond the grid
    double x = (lny - I.ln_lo) / I.dln;
    int i = (int)x;
    if (i < 1) i = 1;
    if (i > (int)I.grid.size() - 3) i = (int)I.grid.size() - 3;
    double f = x - i;
    // 4-point Lagrange interpolation in ln y
    const double* g = I.grid.data() + (i - 1);
    double c0 = -f * (f - 1.0) * (f - 2.0) / 6.0;
    double c1 = (f + 1.0) * (f - 1.0) * (f - 2.0) / 2.0;
    double c2 = -(f + 1.0) * f * (f - 2.0) / 2.0;
    double c3 = (f + 1.0) * f * (f - 1.0) / 6.0;
    return c0 * g[0] + c1 * g[1] + c2 * g[2] + c3 * g[3];
}

double AfeWeight::bound_A(int A) const {
    if (A < 1 || A > 16) throw std::invalid_argument("bound_A: A in [1,16]");
    return impl_->bounds[A];
}

double AfeWeight::envelope(double y) const {
    double best = impl_->bounds[1] / y;
    for (int A = 2; A <= 16; ++A) best = std::min(best, impl_->bounds[A] * std::pow(y, -(double)A));
    return best;
}

double AfeWeight::tail_bound(double m_cut) const {
    double best = 1e300;
    for (int A = 1; A <= 16; ++A) {
        double b = impl_->bounds[A] * d3_tail(m_cut, A + 0.5);
        best = std::min(best, b);
    }
    return 2.0 * best;
}

std::int64_t AfeWeight::certified_mcut(double eps) const {
    double M = 64.0;
    while (M < 2.0e8) {
        if (tail_bound(M) < eps) {
            // refine downward a little
            double lo = M / 1.25, hi = M;
            for (int it = 0; it < 40; ++it) {
                double mid = 0.5 * (lo + hi);
                (tail_bound(mid) < eps ? hi : lo) = mid;
            }
            return (std::int64_t)std::ceil(hi);
        }
        M *= 1.25;
    }
    throw std::runtime_error("certified_mcut: tail bound does not reach eps below 2e8 terms");
}

namespace {
std::mutex g_afe_mx;
std::map<std::tuple<int, int, int>, std::unique_ptr<AfeWeight>> g_afe_cache;
}  // namespace

const AfeWeight& afe_weight_for(int k, int ell, double contour) {
    std::lock_guard lk(g_afe_mx);
    auto key = std::make_tuple(k, ell, (int)std::lround(contour * 100));
    auto it = g_afe_cache.find(key);
    if (it == g_afe_cache.end())
        it = g_afe_cache.emplace(key, std::make_unique<AfeWeight>(k, ell, contour)).first;
    return *it->second;
}

double afe_weight(double y, int k, int ell) { return afe_weight_for(k, ell)(y); }

}  // namespace rslab
