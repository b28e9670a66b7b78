#pragma once
// Quadrature helpers: fixed Gauss-Legendre panels, adaptive refinement by
// interval doubling, and trapezoid sums for smooth/periodic integrands.

#include <complex>
#include <functional>
#include <vector>

namespace rslab::quad {

using Real = double;
using Cplx = std::complex<double>;

// nodes/weights for n-point Gauss-Legendre on [-1,1] (n <= 64, cached)
struct GLRule {
    std::vector<double> x, w;
};
const GLRule& gauss_legendre(int n);

// integral over [a,b] with a single n-point GL panel
template <class F>
auto gl_panel(F&& f, double a, double b, int n = 32) {
    const GLRule& r = gauss_legendre(n);
    using R = decltype(f(a));
    R s{};
    double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    for (size_t i = 0; i < r.x.size(); ++i) s += r.w[i] * f(mid + half * r.x[i]);
    return s * half;
}

// composite GL with `panels` equal panels
template <class F>
auto gl_composite(F&& f, double a, double b, int panels, int n = 24) {
    using R = decltype(f(a));
    R s{};
    double h = (b - a) / panels;
    for (int p = 0; p < panels; ++p) s += gl_panel(f, a + p * h, a + (p + 1) * h, n);
    return s;
}

// panel-doubling refinement until |I_2k - I_k| < atol, starting from
// `panels0` panels; returns the refined value, writes the last delta
// into *err if given.
Cplx gl_adaptive(const std::function<Cplx(double)>& f, double a, double b,
                 double atol, int panels0 = 8, int n = 24, double* err = nullptr,
                 int max_doublings = 12);
double gl_adaptive_real(const std::function<double(double)>& f, double a, double b,
                        double atol, int panels0 = 8, int n = 24, double* err = nullptr,
                        int max_doublings = 12);

// Fornberg finite-difference weights: w[i] such that
// f^(order)(x0) ~= sum_i w[i] f(grid[i])
std::vector<double> fd_weights(double x0, const std::vector<double>& grid, int order);

// uniform trapezoid on [a,b] with npts points (good for smooth periodic /
// rapidly decaying integrands)
template <class F>
auto trapezoid(F&& f, double a, double b, int npts) {
    using R = decltype(f(a));
    double h = (b - a) / (npts - 1);
    R s = 0.5 * (f(a) + f(b));
    for (int i = 1; i < npts - 1; ++i) s += f(a + i * h);
    return s * h;
}

}  // namespace rslab::quad
