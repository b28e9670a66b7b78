#include "rslab/phase.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "rslab/quad.hpp"

namespace rslab {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;

double fd1(const std::function<double(double)>& f, double x, double h) {
    return (f(x - 2 * h) - 8 * f(x - h) + 8 * f(x + h) - f(x + 2 * h)) / (12 * h);
}
double fd2(const std::function<double(double)>& f, double x, double h) {
    return (-f(x - 2 * h) + 16 * f(x - h) - 30 * f(x) + 16 * f(x + h) - f(x + 2 * h)) /
           (12 * h * h);
}
}  // namespace

PhaseResult stationary_phase_eval(const PhaseProblem& p, int order) {
    if (order < 0 || order > 6) throw std::invalid_argument("stationary_phase_eval: order in [0,6]");
    PhaseResult out;
    double a = p.lo, b = p.hi;
    double hstep = (b - a) * 1e-5;
    auto hp = p.dphase ? p.dphase : [&](double t) { return fd1(p.phase, t, hstep); };
    auto hpp = p.d2phase ? p.d2phase : [&](double t) { return fd2(p.phase, t, hstep); };

    // scan for a sign change of h' in the interior
    const int ngrid = 512;
    double t0 = 0.0;
    bool found = false;
    double prev = hp(a + (b - a) * 1e-9);
    for (int i = 1; i <= ngrid; ++i) {
        double t = a + (b - a) * i / (ngrid + 1.0);
        double cur = hp(t);
        if ((prev < 0 && cur > 0) || (prev > 0 && cur < 0)) {
            double lo = a + (b - a) * (i - 1) / (ngrid + 1.0), hi = t;
            for (int it = 0; it < 200; ++it) {
                double mid = 0.5 * (lo + hi);
                ((hp(mid) < 0) == (hp(lo) < 0) ? lo : hi) = mid;
            }
            t0 = 0.5 * (lo + hi);
            found = true;
            break;
        }
        prev = cur;
    }

    if (!found) {
        // first-derivative bound path: I << Z (Y/X)^{-A}
        if (p.Y / p.X < 1.0)
            throw std::runtime_error("stationary_phase_eval: no stationary point and Y/X < 1");
        out.stationary = false;
        out.value = {0.0, 0.0};
        out.error_bound = p.Z * std::pow(p.Y / p.X, -(double)(order + 1));
        return out;
    }

    double h2 = hpp(t0);
    if (!(h2 > 0.0))
        throw std::runtime_error("stationary_phase_eval: h''(t0) must be positive");
    // spot-check the inert-scale conditions h'' >~ Y/Q^2 and |h^(j)| <~ Y/Q^j
    if (h2 < 1e-4 * p.Y / (p.Q * p.Q))
        throw std::runtime_error("stationary_phase_eval: h'' too small for the stated scales");

    double ht0 = p.phase(t0);
    auto G = [&](double t) {
        double H = p.phase(t) - ht0 - 0.5 * h2 * (t - t0) * (t - t0);
        return std::complex<double>(p.amp(t), 0.0) *
               std::exp(std::complex<double>(0.0, kTwoPi * H));
    };

    std::complex<double> series(0.0, 0.0);
    double rfac = 1.0;
    std::complex<double> ipow(1.0, 0.0);
    std::complex<double> e4 = std::exp(std::complex<double>(0.0, M_PI / 4.0));
    double lastmag = 0.0;
    for (int r = 0; r <= order; ++r) {
        // G^(2r)(t0) via a (2r+4)-point-plus central stencil scaled to Q
        int half = r + 2;
        double step = p.Q * std::pow(2.3e-16, 1.0 / (2 * r + 6));
        std::vector<double> grid(2 * half + 1);
        for (int i = 0; i <= 2 * half; ++i) grid[i] = (i - half) * step;
        auto wts = quad::fd_weights(0.0, grid, 2 * r);
        std::complex<double> d(0.0, 0.0);
        for (int i = 0; i <= 2 * half; ++i) d += wts[i] * G(t0 + grid[i]);
        std::complex<double> pr = e4 / rfac * ipow * d;
        series += pr;
        lastmag = std::abs(pr);
        rfac *= (r + 1);
        ipow *= std::complex<double>(0.0, 1.0) / (4.0 * M_PI * h2);
    }
    out.stationary = true;
    out.t0 = t0;
    out.terms = order + 1;
    out.value = std::exp(std::complex<double>(0.0, kTwoPi * ht0)) / std::sqrt(h2) * series;
    // budget: next-term magnitude plus the lemma's power tail
    out.error_bound = (lastmag / std::sqrt(h2)) * 0.5 +
                      p.Z * std::pow(std::max(p.Z, 2.0), -(double)(order + 1));
    return out;
}

std::complex<double> oscillatory_integral_direct(const PhaseProblem& p, double atol) {
    double a = p.lo, b = p.hi;
    auto f = [&](double t) {
        return std::complex<double>(p.amp(t), 0.0) *
               std::exp(std::complex<double>(0.0, kTwoPi * p.phase(t)));
    };
    // panel count from the total phase variation
    double hstep = (b - a) * 1e-5;
    auto hp = p.dphase ? p.dphase : [&](double t) { return fd1(p.phase, t, hstep); };
    double var = 0.0;
    int nscan = 200;
    for (int i = 0; i <= nscan; ++i) {
        double t = a + (b - a) * i / nscan;
        var += std::fabs(hp(t)) * (b - a) / nscan;
    }
    int panels = (int)(var * 0.75) + 12;
    return quad::gl_adaptive(f, a, b, atol, panels, 24);
}

}  // namespace rslab
