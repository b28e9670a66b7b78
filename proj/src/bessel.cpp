#include "rslab/bessel.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "rslab/quad.hpp"

namespace rslab {

namespace {

constexpr long double kPiL = 3.14159265358979323846264338328L;

// ---- power series, long double ----------------------------------------
double j_series(double nu, double x) {
    long double q = (long double)x * (long double)x / 4.0L;
    long double lpre = (long double)nu * std::log((long double)x / 2.0L) -
                       std::lgamma((long double)nu + 1.0L);
    if (lpre < -740.0L) return 0.0;  // underflows double anyway
    long double pre = std::exp(lpre);
    long double term = 1.0L, sum = 1.0L;
    for (int j = 1; j < 400; ++j) {
        term *= -q / ((long double)j * ((long double)nu + j));
        sum += term;
        if (std::fabs((double)term) < 1e-22L * std::fabs((double)sum) + 1e-320) break;
    }
    return (double)(pre * sum);
}

// ---- backward recurrence, monotone zone x < 0.7 nu ---------------------
// Normalized with (x/2)^nu = sum_k (nu+2k) Gamma(nu+k)/k! J_{nu+2k}(x);
// all summands positive below the turning point, so the normalization has
// no cancellation.
double j_miller(double nu, double x) {
    int top = (int)(nu + 0.8 * x + 60.0);
    int nsteps = top - 0;  // recur orders nu + m, m = top ... 0
    std::vector<long double> p((size_t)nsteps + 2);
    p[nsteps + 1] = 0.0L;
    p[nsteps] = 1e-280L;
    for (int m = nsteps; m >= 1; --m) {
        long double order = (long double)nu + m;
        p[m - 1] = (2.0L * order / (long double)x) * p[m] - p[m + 1];
        if (std::fabs((double)p[m - 1]) > 1e260) {
            for (int i = m - 1; i <= nsteps + 1; ++i) p[i] *= 1e-260L;
        }
    }
    // sum_k r_k p_{2k} with r_k = (nu+2k) Gamma(nu+k) / (k! Gamma(nu+1)),
    // r_0 = 1, r_k/r_{k-1} = (nu+2k)(nu+k-1) / ((nu+2k-2) k)
    long double norm = 0.0L, r = 1.0L;
    for (int k = 0; 2 * k <= nsteps; ++k) {
        if (k > 0)
            r *= ((long double)nu + 2 * k) * ((long double)nu + k - 1) /
                 (((long double)nu + 2 * k - 2) * (long double)k);
        norm += r * p[2 * k];
        if (r * std::fabs((double)p[2 * k]) < 1e-30L * std::fabs((double)norm) && k > 4) break;
    }
    long double lpre = (long double)nu * std::log((long double)x / 2.0L) -
                       std::lgamma((long double)nu + 1.0L);
    if (lpre < -740.0L) return 0.0;
    return (double)(p[0] / norm * std::exp(lpre));
}

// ---- Hankel asymptotics, x >> nu^2 -------------------------------------
// a_m = prod_{j<=m} (4 nu^2 - (2j-1)^2) / (8 x m!); works for nu^2 real of
// either sign (imaginary order passes nu2 < 0).
void hankel_pq(double nu2, double z, long double& P, long double& Q) {
    long double mu = 4.0L * (long double)nu2;
    long double a = 1.0L;
    P = 1.0L;
    Q = 0.0L;
    long double prev = 1e300L;
    for (int m = 1; m < 40; ++m) {
        a *= (mu - (long double)(2 * m - 1) * (2 * m - 1)) / (8.0L * (long double)z * m);
        if (std::fabs((double)a) > (double)prev) break;  // divergence onset
        prev = std::fabs((double)a);
        int r = m % 4;
        if (r == 1) Q += a;
        else if (r == 2) P -= a;
        else if (r == 3) Q -= a;
        else P += a;
        if (std::fabs((double)a) < 1e-19L) break;
    }
}

double j_hankel(double nu, double x) {
    long double P, Q;
    hankel_pq(nu * nu, x, P, Q);
    long double w = (long double)x - (long double)nu * kPiL / 2.0L - kPiL / 4.0L;
    return (double)(std::sqrt(2.0L / (kPiL * (long double)x)) * (std::cos(w) * P - std::sin(w) * Q));
}

double y_hankel(double nu, double x) {
    long double P, Q;
    hankel_pq(nu * nu, x, P, Q);
    long double w = (long double)x - (long double)nu * kPiL / 2.0L - kPiL / 4.0L;
    return (double)(std::sqrt(2.0L / (kPiL * (long double)x)) * (std::sin(w) * P + std::cos(w) * Q));
}

// ---- oscillatory mid-range ---------------------------------------------
// integer order: trapezoid of (1/pi) int_0^pi cos(n t - x sin t) dt; the
// even periodic extension makes the rule spectrally accurate once the
// subinterval count clears the aliasing threshold 2N - n > x + margin.
double j_int_trap(int n, double x) {
    double margin = 12.0 * std::cbrt(x + 1.0) + 40.0;
    int N = (int)((x + n + margin) / 2.0) + 1;
    long double s = 0.5L * (std::cos(0.0L) + std::cos((long double)n * kPiL));
    for (int i = 1; i < N; ++i) {
        long double th = kPiL * i / N;
        s += std::cos((long double)n * th - (long double)x * std::sin(th));
    }
    return (double)(s / N);
}

// real order: Gauss-Legendre panels for the oscillatory part plus the
// -sin(nu pi)/pi int_0^inf e^{-nu t - x sinh t} dt correction
double j_int_real(double nu, double x) {
    int panels = (int)((nu + 0.7 * x) / 4.0) + 10;
    long double s = 0.0L;
    const auto& rule = quad::gauss_legendre(16);
    for (int p = 0; p < panels; ++p) {
        long double a = kPiL * p / panels, b = kPiL * (p + 1) / panels;
        long double mid = 0.5L * (a + b), half = 0.5L * (b - a);
        for (size_t i = 0; i < rule.x.size(); ++i) {
            long double th = mid + half * (long double)rule.x[i];
            s += (long double)rule.w[i] * half *
                 std::cos((long double)nu * th - (long double)x * std::sin(th));
        }
    }
    double osc = (double)(s / kPiL);
    double snp = std::sin(nu * M_PI);
    if (std::fabs(snp) < 1e-18) return osc;
    // int_0^inf e^{-nu t - x sinh t} dt, substitute u = x sinh t
    auto g = [&](double u) {
        double sh = u / x;
        double t = std::log(sh + std::sqrt(1.0 + sh * sh));
        return std::exp(-nu * t - u) / (x * std::sqrt(1.0 + sh * sh));
    };
    double corr = quad::gl_adaptive_real(g, 0.0, 48.0, 1e-16, 12, 24);
    return osc - snp / M_PI * corr;
}

}  // namespace

double bessel_j(double nu, double x) {
    if (!(nu >= 0.0 && nu <= 300.0) || !(x >= 0.0 && x <= 1.0e5))
        throw std::domain_error("bessel_j: parameters outside validated range");
    if (x == 0.0) return nu == 0.0 ? 1.0 : 0.0;
    if (x <= 14.0 || (double)x * x <= 2.0 * (nu + 1.0)) return j_series(nu, x);
    if (x < 0.7 * nu) return j_miller(nu, x);
    if (x >= std::max(45.0, 1.9 * nu * nu)) return j_hankel(nu, x);
    double ni = std::nearbyint(nu);
    if (std::fabs(nu - ni) < 1e-12) return j_int_trap((int)ni, x);
    return j_int_real(nu, x);
}

double bessel_k_imag(double mu, double x) {
    if (!(x > 0.0)) throw std::domain_error("bessel_k_imag: need x > 0");
    mu = std::fabs(mu);
    // e^{-x cosh T} < 1e-18  =>  cosh T > 42/x
    double ch = std::max(42.0 / x, 1.5);
    double T = std::acosh(ch) + 0.5;
    auto f = [&](double t) { return std::exp(-x * std::cosh(t)) * std::cos(mu * t); };
    int n = 600 + (int)(mu * T * 8.0) + (int)(4.0 * x > 200 ? std::sqrt(x) : 0.0);
    double prev = quad::trapezoid(f, 0.0, T, n);
    for (int it = 0; it < 8; ++it) {
        n *= 2;
        double cur = quad::trapezoid(f, 0.0, T, n);
        if (std::fabs(cur - prev) < 1e-13 * std::max(1.0, std::fabs(cur))) return cur;
        prev = cur;
    }
    return prev;
}

double bessel_y_imag_pair(double mu, double x) {
    if (!(x > 0.0)) throw std::domain_error("bessel_y_imag_pair: need x > 0");
    mu = std::fabs(mu);
    if (x >= std::max(45.0, 1.9 * mu * mu + 45.0)) {
        // Hankel with nu^2 = -mu^2; the pair shares P,Q (even in nu)
        long double P, Q;
        hankel_pq(-mu * mu, x, P, Q);
        long double w = (long double)x - kPiL / 4.0L;
        double base = (double)(std::sqrt(2.0L / (kPiL * (long double)x)) *
                               (std::sin(w) * P + std::cos(w) * Q));
        return 2.0 * std::cosh(mu * M_PI / 2.0) * base;
    }
    // (2/pi) int_0^pi sin(x sin t) cosh(mu t) dt
    //  - (2/pi)(1 + cosh(mu pi)) int_0^inf cos(mu t) e^{-x sinh t} dt
    int panels = (int)(0.7 * x / 4.0) + 10 + (int)(mu * 2.0);
    long double s = 0.0L;
    const auto& rule = quad::gauss_legendre(16);
    for (int p = 0; p < panels; ++p) {
        long double a = kPiL * p / panels, b = kPiL * (p + 1) / panels;
        long double mid = 0.5L * (a + b), half = 0.5L * (b - a);
        for (size_t i = 0; i < rule.x.size(); ++i) {
            long double th = mid + half * (long double)rule.x[i];
            s += (long double)rule.w[i] * half * std::sin((long double)x * std::sin(th)) *
                 std::cosh((long double)mu * th);
        }
    }
    double osc = (double)(2.0L * s / kPiL);
    auto g = [&](double u) {
        double sh = u / x;
        double t = std::log(sh + std::sqrt(1.0 + sh * sh));
        return std::cos(mu * t) * std::exp(-u) / (x * std::sqrt(1.0 + sh * sh));
    };
    double tail = quad::gl_adaptive_real(g, 0.0, 48.0, 1e-16, 12, 24);
    return osc - 2.0 / M_PI * (1.0 + std::cosh(mu * M_PI)) * tail;
}

double bessel_y0(double x) {
    if (x >= 45.0) return y_hankel(0.0, x);
    return 0.5 * bessel_y_imag_pair(0.0, x);
}

std::complex<double> hankel_w(int k, double x) {
    double z = 2.0 * M_PI * x;
    double nu = k - 1.0;
    if (!(x >= 1.0) || z < nu * nu / (2.0 * M_PI))
        throw std::domain_error("hankel_w: outside the oscillatory regime x >= max(1, k^2/(4pi^2))");
    long double P, Q;
    hankel_pq(nu * nu, z, P, Q);
    // J_{k-1}(2 pi x) = (1/(pi sqrt x)) Re[(P + iQ) e^{i(z - nu pi/2 - pi/4)}]
    //                 = 2 Re[W e^{2 pi i x}] / sqrt(x)
    std::complex<long double> pq(P, Q);
    long double phase = -(long double)nu * kPiL / 2.0L - kPiL / 4.0L;
    std::complex<long double> w =
        pq * std::exp(std::complex<long double>(0.0L, phase)) / (2.0L * kPiL);
    return {(double)w.real(), (double)w.imag()};
}

HankelCheck hankel_decomposition(int k, double x) {
    HankelCheck out;
    out.w = hankel_w(k, x);
    std::complex<double> ex = std::exp(std::complex<double>(0.0, 2.0 * M_PI * x));
    double recon = 2.0 * (out.w * ex).real() / std::sqrt(x);
    out.residual = std::fabs(bessel_j(k - 1.0, 2.0 * M_PI * x) - recon);
    for (int j = 0; j <= 2; ++j) {
        if (j == 0) {
            out.deriv_bound[0] = std::abs(out.w);
            continue;
        }
        double h = x * 1e-3;
        std::vector<double> grid;
        for (int i = -3; i <= 3; ++i) grid.push_back(i * h);
        auto wts = quad::fd_weights(0.0, grid, j);
        std::complex<double> d(0.0, 0.0);
        for (size_t i = 0; i < grid.size(); ++i) d += wts[i] * hankel_w(k, x + grid[i]);
        out.deriv_bound[j] = std::pow(x, j) * std::abs(d);
    }
    return out;
}

}  // namespace rslab
