#pragma once
// The family side: Petersson trace formula geometric evaluation, harmonic
// weights solved from it, the k-averaged Bessel transform, the Poisson
// check, the full moment, and the nonvanishing scan.

#include <cstdint>
#include <string>
#include <vector>

#include "rslab/forms.hpp"
#include "rslab/window.hpp"

namespace rslab {

// delta_{m,n} + 2 pi i^{-k} sum_{c<=cmax} S(m,n;c)/c J_{k-1}(4 pi sqrt(mn)/c)
// with cmax so the certified tail (Weil bound + small-argument Bessel decay)
// is < tol.  Throws if no cmax <= 10^6 certifies.
double petersson_geometric(std::int64_t m, std::int64_t n, int k, double tol = 1e-9);

struct HarmonicWeights {
    int k = 0;
    std::vector<double> omega_inv;  // per form, sorted like hecke_eigenforms
    double heldout_residual = 0.0;  // worst relative defect on verification pairs
};
// solves sum_g w_g lambda_g(1) lambda_g(n) = geometric(1,n) for n = 1..dim,
// verifies on held-out pairs, stores omega_inv into the forms
HarmonicWeights solve_harmonic_weights(int k, std::vector<HeckeEigenform>& forms,
                                       int n_heldout = 10);

struct BesselAverage {
    double sum_side = 0.0;       // sum_{2|k} i^k g(k-1) J_{k-1}(x)
    double integral_side = 0.0;  // Fourier-transform route
    double diff = 0.0;
};
BesselAverage bessel_k_average(const SmoothWindow& gwin, double x);

// |4 sum_{k even} u((k-1)/K) - 2K int u|
double poisson_even_check(const SmoothWindow& u, double K);

struct MomentRow {
    int k = 0;
    int index = 0;
    double omega_inv = 0.0;
    double lf = 0.0, lh = 0.0;  // L(1/2,f x g), L(1/2,g x h)
    double window = 0.0;        // u((k-1)/K)
};
struct MomentReport {
    double K = 0.0;
    std::vector<MomentRow> rows;
    double total = 0.0;        // I(K)
    double diagonal = 0.0;     // 4 sum_k u((k-1)/K) D_k
    double offdiag = 0.0;      // total - diagonal
    bool conjugate_pair = false;  // f and h are the same form (flagged, allowed)
};
MomentReport moment(const FormTable& f, const FormTable& h, double K, const SmoothWindow& u,
                    const std::string& cache_dir, double eps = 1e-8);

struct Witness {
    int k = 0;
    int index = 0;
    double product = 0.0;  // L(1/2,f x g) L(1/2,g x h)
};
struct NonvanishingReport {
    std::vector<Witness> witnesses;       // best per weight, above threshold
    std::vector<int> weights_without;     // weights where no form passed
    std::vector<int> weights_skipped;     // dim S_k = 0
};
NonvanishingReport nonvanishing_scan(const FormTable& f, const FormTable& h, int k_lo, int k_hi,
                                     double threshold, const std::string& cache_dir);

}  // namespace rslab
