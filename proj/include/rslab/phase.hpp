#pragma once
// Stationary phase: second-derivative expansion with finite-difference
// amplitude derivatives, plus the non-stationary decay path and a direct
// oscillatory quadrature used as the oracle.

#include <complex>
#include <functional>

#include "rslab/window.hpp"

namespace rslab {

struct PhaseProblem {
    std::function<double(double)> amp;      // omega(t), supported in [lo, hi]
    double lo = 0.0, hi = 1.0;
    std::function<double(double)> phase;    // h(t), argument of e(h(t))
    std::function<double(double)> dphase;   // h'(t); empty -> finite differences
    std::function<double(double)> d2phase;  // h''(t); empty -> finite differences
    // scales of the inert family: |h^(j)| ~ Y/Q^j on the support, amplitude
    // family X-inert with t-support scale Z
    double Y = 1.0, Z = 1.0, Q = 1.0, X = 1.0;

    static PhaseProblem from_window(const SmoothWindow& w) {
        PhaseProblem p;
        p.amp = [w](double t) { return w(t); };
        p.lo = w.lo();
        p.hi = w.hi();
        return p;
    }
};

struct PhaseResult {
    std::complex<double> value{0.0, 0.0};
    double error_bound = 0.0;
    bool stationary = false;
    double t0 = 0.0;
    int terms = 0;
};

// expansion I = e(h(t0))/sqrt(h''(t0)) sum_{r<=order} p_r(t0),
// p_r = (e^{i pi/4}/r!) (i/(4 pi h''(t0)))^r G^(2r)(t0), G = omega e(H).
// Without an interior stationary point, returns 0 with the first-derivative
// decay bound (requires Y/X >= 1, else throws).
PhaseResult stationary_phase_eval(const PhaseProblem& p, int order);

// adaptive direct quadrature of int omega(t) e(h(t)) dt (the oracle)
std::complex<double> oscillatory_integral_direct(const PhaseProblem& p, double atol = 1e-12);

}  // namespace rslab
