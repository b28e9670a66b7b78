#pragma once
// Bessel evaluators: J_nu for real nu >= 0 across four regimes, the
// imaginary-order K and symmetrized Y kernels needed by Voronoi summation,
// and the Hankel-range amplitude W_k.

#include <complex>

namespace rslab {

// J_nu(x) for 0 <= nu <= 300, 0 <= x <= 1e5.
// Regimes: power series (small x), backward recurrence with Neumann-series
// normalization (x below the turning point), integral representation
// (oscillatory mid-range), Hankel asymptotics (x >> nu^2).
// Throws outside the validated parameter box.
double bessel_j(double nu, double x);

// K_{i mu}(x) = int_0^inf e^{-x cosh t} cos(mu t) dt  (real, x > 0)
double bessel_k_imag(double mu, double x);

// Y_{i mu}(x) + Y_{-i mu}(x), real for real mu
double bessel_y_imag_pair(double mu, double x);

// Y_0(x)
double bessel_y0(double x);

// W_k with J_{k-1}(2 pi x) = W_k(x) e(x)/sqrt(x) + conj(W_k(x)) e(-x)/sqrt(x),
// from the truncated Hankel expansion; valid for x >= max(1, k^2/(4 pi^2)).
std::complex<double> hankel_w(int k, double x);

struct HankelCheck {
    std::complex<double> w;
    double residual;        // |J_{k-1}(2 pi x) - 2 Re(W e(x)/sqrt x)|
    double deriv_bound[3];  // measured |x^j d^j W| for j = 0,1,2
};
HankelCheck hankel_decomposition(int k, double x);

}  // namespace rslab
