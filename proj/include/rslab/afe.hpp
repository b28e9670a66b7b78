#pragma once
// The approximate-functional-equation contour weight
//   U(y,k) = (1/2pi i) int_(A) y^{-u} e^{u^2} gamma(1/2+u,k)/gamma(1/2,k) du/u
// cached on a log grid per (k,l), plus rigorous truncation certificates via
// contour bounds |U(y)| <= B_A y^{-A}.

#include <cstdint>
#include <memory>

namespace rslab {

class AfeWeight {
  public:
    // k: weight of the averaged form; ell: fixed form's gamma parameter
    AfeWeight(int k, int ell, double contour = 3.0, double height = 9.0);

    int k() const { return k_; }
    int ell() const { return ell_; }

    // grid-interpolated value (falls back to direct quadrature off-grid)
    double operator()(double y) const;
    // single contour quadrature; the imaginary part (should vanish by
    // conjugate symmetry) is written to *imag_resid when given
    double direct(double y, double* imag_resid = nullptr) const;

    // rigorous bound |U(y)| <= bound_A(A) * y^{-A}, A = 1..16
    double bound_A(int A) const;
    // best pointwise envelope min_A bound_A y^{-A}
    double envelope(double y) const;
    // upper bound for 2 sum_{m > M} d3(m) m^{-1/2} |U(m)|
    double tail_bound(double m_cut) const;
    // smallest M with tail_bound(M) < eps (throws above 10^8)
    std::int64_t certified_mcut(double eps) const;

    double contour() const { return contour_; }
    double height() const { return height_; }

  private:
    int k_, ell_;
    double contour_, height_;
    // precomputed contour samples: coeff[t] = h w_t G(u) gammaratio(u)/u
    struct Impl;
    std::shared_ptr<Impl> impl_;
};

// process-wide cache keyed by (k, ell, contour)
const AfeWeight& afe_weight_for(int k, int ell, double contour = 3.0);

// convenience matching the operation signature
double afe_weight(double y, int k, int ell);

}  // namespace rslab
