#include "rslab/quad.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace rslab::quad {

namespace {
std::mutex g_rule_mx;
std::map<int, GLRule> g_rules;

// Newton iteration on Legendre polynomials
GLRule make_rule(int n) {
    GLRule r;
    r.x.resize(n);
    r.w.resize(n);
    for (int i = 0; i < n; ++i) {
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int j = 2; j <= n; ++j) {
                double p2 = ((2 * j - 1) * x * p1 - (j - 1) * p0) / j;
                p0 = p1;
                p1 = p2;
            }
            double dp = n * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / dp;
            x -= dx;
            if (std::fabs(dx) < 1e-16) break;
        }
        double p0 = 1.0, p1 = x;
        for (int j = 2; j <= n; ++j) {
            double p2 = ((2 * j - 1) * x * p1 - (j - 1) * p0) / j;
            p0 = p1;
            p1 = p2;
        }
        double dp = n * (x * p1 - p0) / (x * x - 1.0);
        r.x[n - 1 - i] = x;
        r.w[n - 1 - i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    return r;
}
}  // namespace

const GLRule& gauss_legendre(int n) {
    if (n < 1 || n > 128) throw std::invalid_argument("gauss_legendre: n out of range");
    std::lock_guard lk(g_rule_mx);
    auto it = g_rules.find(n);
    if (it == g_rules.end()) it = g_rules.emplace(n, make_rule(n)).first;
    return it->second;
}

Cplx gl_adaptive(const std::function<Cplx(double)>& f, double a, double b,
                 double atol, int panels0, int n, double* err, int max_doublings) {
    int panels = panels0;
    Cplx prev = gl_composite(f, a, b, panels, n);
    for (int d = 0; d < max_doublings; ++d) {
        panels *= 2;
        Cplx cur = gl_composite(f, a, b, panels, n);
        double delta = std::abs(cur - prev);
        if (delta < atol) {
            if (err) *err = delta;
            return cur;
        }
        prev = cur;
    }
    if (err) *err = std::abs(prev) * 1e-3 + atol;  // did not certify
    return prev;
}

std::vector<double> fd_weights(double x0, const std::vector<double>& grid, int order) {
    const int n = static_cast<int>(grid.size()) - 1;
    if (n < order) throw std::invalid_argument("fd_weights: stencil too small for order");
    const int m = order;
    // delta[nu][k]: weight of grid[nu] for the k-th derivative, built up
    // over the points 0..nn (Fornberg 1988)
    std::vector<std::vector<double>> d(n + 1, std::vector<double>(m + 1, 0.0));
    std::vector<std::vector<std::vector<double>>> delta(
        n + 1, std::vector<std::vector<double>>(n + 1, std::vector<double>(m + 1, 0.0)));
    delta[0][0][0] = 1.0;
    double c1 = 1.0;
    for (int nn = 1; nn <= n; ++nn) {
        double c2 = 1.0;
        for (int nu = 0; nu < nn; ++nu) {
            double c3 = grid[nn] - grid[nu];
            c2 *= c3;
            for (int k = 0; k <= std::min(nn, m); ++k) {
                double prev = (k > 0) ? delta[nn - 1][nu][k - 1] : 0.0;
                delta[nn][nu][k] = ((grid[nn] - x0) * delta[nn - 1][nu][k] - k * prev) / c3;
            }
        }
        for (int k = 0; k <= std::min(nn, m); ++k) {
            double prev = (k > 0) ? delta[nn - 1][nn - 1][k - 1] : 0.0;
            delta[nn][nn][k] = (c1 / c2) * (k * prev - (grid[nn - 1] - x0) * delta[nn - 1][nn - 1][k]);
        }
        c1 = c2;
    }
    std::vector<double> w(n + 1);
    for (int i = 0; i <= n; ++i) w[i] = delta[n][i][m];
    return w;
}

double gl_adaptive_real(const std::function<double(double)>& f, double a, double b,
                        double atol, int panels0, int n, double* err, int max_doublings) {
    int panels = panels0;
    double prev = gl_composite(f, a, b, panels, n);
    for (int d = 0; d < max_doublings; ++d) {
        panels *= 2;
        double cur = gl_composite(f, a, b, panels, n);
        double delta = std::fabs(cur - prev);
        if (delta < atol) {
            if (err) *err = delta;
            return cur;
        }
        prev = cur;
    }
    if (err) *err = std::fabs(prev) * 1e-3 + atol;
    return prev;
}

}  // namespace rslab::quad
