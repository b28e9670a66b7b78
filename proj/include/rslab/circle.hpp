#pragma once
// The DFI delta symbol and the shifted-convolution laboratory: exact
// delta reproduction, the g(q,u) property contracts, direct and
// delta-decomposed shifted sums, exponent measurement, and the localized
// integral-transform probe.

#include <cstdint>
#include <string>
#include <vector>

#include "rslab/forms.hpp"
#include "rslab/window.hpp"

namespace rslab {

class DeltaDecomposition {
  public:
    // Q = 2 sqrt(M); w a bump on [Q/2, Q] normalized to sum_{d>=1} w(d) = 1
    explicit DeltaDecomposition(std::int64_t M);

    std::int64_t M() const { return m_; }
    double Q() const { return q_; }
    int q_count() const { return (int)per_q_.size(); }

    // g(q,u) from the stored uniform grid (u may be negative; g is even)
    double g(int q, double u) const;
    double u_step(int q) const { return per_q_[q - 1].h_u; }
    double u_max(int q) const { return per_q_[q - 1].h_u * (double)(per_q_[q - 1].g.size() - 1); }

    // assembled right side of the delta expansion at integer n
    double delta(std::int64_t n) const;
    // worst |delta(n) - [n==0]| over |n| <= range (range defaults to 2M)
    double worst_defect(std::int64_t range = 0, std::int64_t* worst_n = nullptr) const;

    // int g(q,u) e(w u /(qQ)) du for real w, from the same grid
    double fourier_kernel(int q, double w) const;

    const SmoothWindow& bump() const { return w_; }

  private:
    std::int64_t m_;
    double q_;
    SmoothWindow w_;
    struct QGrid {
        double h_u = 0.0;
        std::vector<double> g;  // g(q, j h_u), j >= 0
    };
    std::vector<QGrid> per_q_;
    friend struct DeltaInternals;
};

struct GPropertiesReport {
    std::int64_t M = 0;
    double Q = 0.0;
    // per q: int (|g| + |g|^2) du and its ratio to log^2 Q
    std::vector<double> l1l2_integral;
    double worst_l1l2 = 0.0;
    double l1l2_over_log2q = 0.0;  // the recorded C''
    double flatness_small_qu = 0.0;  // max |g-1| over q <= Q^{3/4}, |u| <= Q^{-1/4}
    double tail_decay_at_10 = 0.0;   // max over q of |g(q, +-10)|
};
GPropertiesReport g_properties_check(const DeltaDecomposition& dd);

// sum_n lambda_f(n) lambda_g(n+h) W(n/N); requires tables to 3N + h
double shifted_sum_direct(const FormTable& f, const FormTable& g, std::int64_t h, std::int64_t N,
                          const SmoothWindow& W);

struct DecomposedSum {
    double value = 0.0;
    double direct = 0.0;
    double defect_bound = 0.0;  // worst delta defect times the L1 mass
    std::int64_t M = 0;
};
DecomposedSum shifted_sum_decomposed(const FormTable& f, const FormTable& g, std::int64_t h,
                                     std::int64_t N, const SmoothWindow& W, const SmoothWindow& V);

struct ShiftedSumReport {
    std::string f_label, g_label;
    std::int64_t h = 0;
    std::vector<std::int64_t> N;
    std::vector<double> S;
    double slope = 0.0;      // least squares of log|S| vs log N
    double residual = 0.0;   // rms fit residual
    int used_points = 0;
};
ShiftedSumReport shifted_exponent(const FormTable& f, const FormTable& g, std::int64_t h,
                                  const std::vector<std::int64_t>& N_list, const SmoothWindow& W);

struct TransformProbe {
    double magnitude = 0.0;       // |I(q,n,m)|
    double bound_qQ = 0.0;        // q/Q reference scale
    double kernel_mass_outside = 0.0;  // localization diagnostic
    double flat_vs_closed = 0.0;  // |quadrature - closed sinc| for g == 1
};
TransformProbe integral_transform_probe(const DeltaDecomposition& dd, int q, std::int64_t n,
                                        std::int64_t m, std::int64_t N, std::int64_t h);

}  // namespace rslab
