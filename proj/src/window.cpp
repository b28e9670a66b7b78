#include "rslab/window.hpp"

#include <cmath>
#include <stdexcept>

#include "rslab/quad.hpp"

namespace rslab {

namespace {
// Gevrey-type transition: f(t) = exp(-2/t^2) gives the window a Fourier
// tail ~ exp(-c xi^{2/3}); the classic exp(-1/t) profile only reaches
// exp(-c sqrt(xi)), too slow for the 1e-8 Poisson residuals downstream.
double f01(double t) { return t > 0.0 ? std::exp(-2.0 / (t * t)) : 0.0; }
double smoothstep(double t) {
    if (t <= 0.0) return 0.0;
    if (t >= 1.0) return 1.0;
    double u = f01(t), v = f01(1.0 - t);
    return u / (u + v);
}
}  // namespace

SmoothWindow SmoothWindow::bump(double a, double b, double amp) {
    if (!(b > a)) throw std::invalid_argument("SmoothWindow::bump: need b > a");
    SmoothWindow w;
    w.kind_ = Kind::kBump;
    w.a_ = a;
    w.b_ = w.c_ = 0.5 * (a + b);
    w.d_ = b;
    w.amp_ = amp;
    return w;
}

SmoothWindow SmoothWindow::plateau(double a, double b, double c, double d, double amp) {
    if (!(a < b && b <= c && c < d)) throw std::invalid_argument("SmoothWindow::plateau: need a<b<=c<d");
    SmoothWindow w;
    w.kind_ = Kind::kPlateau;
    w.a_ = a;
    w.b_ = b;
    w.c_ = c;
    w.d_ = d;
    w.amp_ = amp;
    return w;
}

double SmoothWindow::operator()(double x) const {
    if (x <= a_ || x >= d_) return 0.0;
    if (kind_ == Kind::kBump) {
        double t = 2.0 * (x - a_) / (d_ - a_) - 1.0;  // (-1,1)
        double s = 1.0 - t * t;
        if (s <= 0.0) return 0.0;
        return amp_ * std::exp(2.0 - 2.0 / (s * s));  // normalized to peak amp_
    }
    if (x < b_) return amp_ * smoothstep((x - a_) / (b_ - a_));
    if (x <= c_) return amp_;
    return amp_ * smoothstep((d_ - x) / (d_ - c_));
}

SmoothWindow SmoothWindow::scaled(double factor) const {
    SmoothWindow w = *this;
    w.amp_ *= factor;
    w.have_integral_ = false;
    return w;
}

double SmoothWindow::integral() const {
    if (!have_integral_) {
        auto f = [this](double x) { return (*this)(x); };
        integral_ = quad::gl_adaptive_real(f, a_, d_, 1e-14, 16, 24);
        have_integral_ = true;
    }
    return integral_;
}

double SmoothWindow::derivative(double x, int j) const {
    if (j == 0) return (*this)(x);
    if (j < 0 || j > 6) throw std::invalid_argument("SmoothWindow::derivative: order must be in [0,6]");
    double width = d_ - a_;
    double h = width * std::pow(2.220446e-16, 1.0 / (j + 6));
    const int half = j / 2 + 3;
    std::vector<double> grid(2 * half + 1);
    for (int i = 0; i <= 2 * half; ++i) grid[i] = (i - half) * h;
    std::vector<double> w = quad::fd_weights(0.0, grid, j);
    double s = 0.0;
    for (int i = 0; i <= 2 * half; ++i) s += w[i] * (*this)(x + grid[i]);
    return s;
}

}  // namespace rslab
