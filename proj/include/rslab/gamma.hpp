#pragma once
// Complex log-gamma (Lanczos with reflection) and the gamma-factor ratios
// of the completed Rankin-Selberg L-function.

#include <complex>

namespace rslab {

// principal branch log Gamma(z); accurate to ~1e-15 relative on the
// right half plane, reflection handles Re z < 0.5
std::complex<double> log_gamma(std::complex<double> z);

// gamma(s,k) = (2pi)^{-2s} Gamma(s+(k+l)/2-1) Gamma(s+(k-l)/2), evaluated
// in log scale.  k is the averaged weight, l the fixed form's weight
// (l = 0 for Eisenstein/Maass-type fixed forms).
std::complex<double> log_gamma_factor(std::complex<double> s, int k, int l);

// gamma(1/2+u,k)/gamma(1/2,k) as exp of a log difference.  Throws if the
// evaluation path crosses a Gamma pole.
std::complex<double> gamma_ratio(std::complex<double> u, int k, int l);

}  // namespace rslab
