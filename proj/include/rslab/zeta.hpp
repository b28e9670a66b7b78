#pragma once
// Riemann zeta on Re s > 0 (s != 1) by Euler-Maclaurin; enough for the
// zeta(2s) prefactors and |zeta(1+2ir)| constants.

#include <complex>

namespace rslab {

std::complex<double> zeta(std::complex<double> s);

}  // namespace rslab
