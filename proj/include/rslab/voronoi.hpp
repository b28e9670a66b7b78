#pragma once
// Voronoi summation: the +- Bessel kernels per form class and the two-sided
// identity check (including the Eisenstein polar terms).

#include <complex>
#include <cstdint>

#include "rslab/forms.hpp"
#include "rslab/window.hpp"

namespace rslab {

// J_f^{+}(x) / J_f^{-}(x):
//   holomorphic weight kf:  J^+ = 2 pi i^{kf} J_{kf-1}(x) (real, kf even),
//                           J^- = 0
//   Maass/Eisenstein (r):   J^+ = -pi (Y_{2ir} + Y_{-2ir})(x) / cosh(pi r),
//                           J^- = eps_f 4 cosh(pi r) K_{2ir}(x)
// x = 0 throws (the kernels are singular/undefined there).
double voronoi_kernel(const FormTable& f, int sign, double x);

struct VoronoiCheck {
    std::complex<double> lhs;       // c sum_n lambda(n) e(na/c) F(n)
    std::complex<double> rhs;       // dual side incl. polar terms
    std::complex<double> polar;     // Eisenstein polar contribution (in rhs)
    double scale;                   // c sum_n |lambda(n)| F(n)
    double residual;                // |lhs - rhs| / scale
    int dual_terms;
};

// both sides of  c sum lambda(n) e(na/c) F(n)
//              = sum lambda(n) sum_{+-} e(-+ n abar/c) int F(x) J^{+-}(4pi sqrt(nx)/c) dx
// with the polar term added for Eisenstein input.  gcd(a,c) must be 1.
VoronoiCheck voronoi_identity_check(const FormTable& f, std::int64_t a, std::int64_t c,
                                    const SmoothWindow& F);

}  // namespace rslab
