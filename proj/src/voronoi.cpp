#include "rslab/voronoi.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "rslab/arith.hpp"
#include "rslab/bessel.hpp"
#include "rslab/quad.hpp"
#include "rslab/zeta.hpp"

namespace rslab {

namespace {
constexpr double kEulerGamma = 0.57721566490153286060651209008240;

std::complex<double> unit_e(double frac) {  // e(frac)
    return {std::cos(2.0 * M_PI * frac), std::sin(2.0 * M_PI * frac)};
}
}  // namespace

double voronoi_kernel(const FormTable& f, int sign, double x) {
    if (!(x > 0.0)) throw std::domain_error("voronoi_kernel: x must be > 0");
    if (f.kind == FormTable::Kind::kHolomorphic) {
        if (sign < 0) return 0.0;
        // i^{kf} = (-1)^{kf/2} for even kf
        double s = (f.weight % 4 == 0) ? 1.0 : -1.0;
        return 2.0 * M_PI * s * bessel_j(f.weight - 1.0, x);
    }
    double r = f.r;
    if (sign > 0) {
        return -M_PI * bessel_y_imag_pair(2.0 * r, x) / std::cosh(M_PI * r);
    }
    int eps = f.is_eisenstein() ? 1 : f.sign;
    return eps * 4.0 * std::cosh(M_PI * r) * bessel_k_imag(2.0 * r, x);
}

VoronoiCheck voronoi_identity_check(const FormTable& f, std::int64_t a, std::int64_t c,
                                    const SmoothWindow& F) {
    if (c < 1 || std::gcd(a, c) != 1) throw std::invalid_argument("voronoi_identity_check: need gcd(a,c)=1");
    VoronoiCheck out{};
    std::int64_t lo = std::max<std::int64_t>(1, (std::int64_t)std::floor(F.lo()));
    std::int64_t hi = (std::int64_t)std::ceil(F.hi());
    if (f.n_max() < hi) throw std::invalid_argument("voronoi_identity_check: table too short for F support");

    std::complex<double> lhs(0.0, 0.0);
    double scale = 0.0;
    for (std::int64_t n = lo; n <= hi; ++n) {
        double Fv = F(static_cast<double>(n));
        if (Fv == 0.0) continue;
        lhs += f(n) * Fv * unit_e(static_cast<double>((a * n) % c) / c);
        scale += std::fabs(f(n)) * Fv;
    }
    lhs *= static_cast<double>(c);
    scale *= static_cast<double>(c);
    out.lhs = lhs;
    out.scale = std::max(scale, 1e-30);

    std::int64_t abar = arith::inv_mod(a, c);

    // dual side: int F(x) J^{+-}(4 pi sqrt(n x)/c) dx decays superalgebraically
    // in n (no stationary point); stop after ten consecutive negligible terms
    std::complex<double> rhs(0.0, 0.0);
    int consec_small = 0;
    int used = 0;
    // per-term cutoff above the panel-quadrature noise floor
    double term_tol = 1e-12 * out.scale;
    for (std::int64_t n = 1; n <= 100000; ++n) {
        double lam;
        if (n <= f.n_max()) lam = f(n);
        else throw std::runtime_error("voronoi_identity_check: dual sum exceeded table range");
        std::complex<double> term(0.0, 0.0);
        for (int sign : {+1, -1}) {
            if (f.kind == FormTable::Kind::kHolomorphic && sign < 0) continue;
            // oscillation count of x -> J(4pi sqrt(nx)/c) over the support
            double cyc = 2.0 * std::sqrt((double)n) *
                         (std::sqrt(F.hi()) - std::sqrt(F.lo())) / (double)c;
            int panels = (int)(cyc * 0.8) + 8;
            auto integrand = [&](double x) {
                return F(x) * voronoi_kernel(f, sign, 4.0 * M_PI * std::sqrt((double)n * x) / c);
            };
            double I = quad::gl_composite(integrand, F.lo(), F.hi(), panels, 16);
            std::int64_t mult = ((sign > 0 ? -abar : abar) % c + c) % c;
            std::int64_t frac = (mult * (n % c)) % c;
            term += unit_e(static_cast<double>(frac) / static_cast<double>(c)) * I;
        }
        term *= lam;
        rhs += term;
        ++used;
        if (std::abs(term) < term_tol) {
            if (++consec_small >= 10) break;
        } else {
            consec_small = 0;
        }
    }
    out.dual_terms = used;

    // Eisenstein polar terms
    std::complex<double> polar(0.0, 0.0);
    if (f.is_eisenstein()) {
        double c2 = static_cast<double>(c) * static_cast<double>(c);
        if (f.r != 0.0) {
            // sum_{+-} zeta(1 +- 2ir) int (x/c^2)^{+-ir} F(x) dx
            std::complex<double> z = zeta(std::complex<double>(1.0, 2.0 * f.r));
            auto integ = quad::gl_adaptive(
                [&](double x) {
                    return std::exp(std::complex<double>(0.0, f.r * std::log(x / c2))) * F(x);
                },
                F.lo(), F.hi(), 1e-13 * out.scale, 16, 24);
            polar = z * integ + std::conj(z * integ);
        } else {
            polar = quad::gl_adaptive_real(
                [&](double x) { return (std::log(x / c2) + 2.0 * kEulerGamma) * F(x); }, F.lo(),
                F.hi(), 1e-13 * out.scale, 16, 24);
        }
    }
    out.polar = polar;
    out.rhs = rhs + polar;
    out.residual = std::abs(out.lhs - out.rhs) / out.scale;
    return out;
}

}  // namespace rslab
