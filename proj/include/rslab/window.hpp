#pragma once
// Compactly supported C^inf windows.  One class covers the bump/plateau
// shapes used as test functions, moment windows, and delta-method bumps.

#include <cstdint>

namespace rslab {

class SmoothWindow {
  public:
    // classic bump exp(-1/(1-t^2)) on (a,b), peak value `amp` at the center
    static SmoothWindow bump(double a, double b, double amp = 1.0);
    // 0 outside (a,d), identically `amp` on [b,c], C^inf transitions
    static SmoothWindow plateau(double a, double b, double c, double d, double amp = 1.0);

    double operator()(double x) const;
    double lo() const { return a_; }
    double hi() const { return d_; }
    double amplitude() const { return amp_; }
    SmoothWindow scaled(double factor) const;

    double integral() const;  // int over the support, cached on first use
    // j-th derivative by central differences (j <= 6)
    double derivative(double x, int j) const;

  private:
    enum class Kind : std::uint8_t { kBump, kPlateau };
    Kind kind_;
    double a_, b_, c_, d_;
    double amp_;
    mutable double integral_ = 0.0;
    mutable bool have_integral_ = false;
};

}  // namespace rslab
