#pragma once
// Level-1 eigenform tables, Eisenstein coefficients, user Maass input,
// and Rankin-Selberg coefficient convolutions.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace rslab {

struct HeckeEigenform {
    int weight = 0;
    int index = 0;  // position after sorting by lambda(2) ascending
    std::vector<double> lam;  // lam[n] = lambda(n), lam[0] unused
    std::optional<double> omega_inv;  // harmonic weight, filled by spectral solve

    std::int64_t n_max() const { return (std::int64_t)lam.size() - 1; }
    double lambda(std::int64_t n) const { return lam[n]; }
};

// all dim S_k eigenforms, lambda tables to n_max, sorted by lambda(2).
// Throws if the T_2 spectrum is degenerate beyond 1e-8 resolution.
std::vector<HeckeEigenform> hecke_eigenforms(int k, std::int64_t n_max);

// lambda_{E_r}(n) = sum_{ad=n} (a/d)^{ir}, table to n_max (index 0 unused)
std::vector<double> eisenstein_coeffs(double r, std::int64_t n_max);

struct MaassFormInput {
    double r = 0.0;
    int sign = +1;  // epsilon_f
    std::vector<double> lam;
    double mult_residual = 0.0;  // reported, not enforced (external data)
};
MaassFormInput load_maass_file(const std::string& path);

// one handle for "a coefficient table with metadata" used downstream
struct FormTable {
    enum class Kind { kHolomorphic, kEisenstein, kMaass };
    Kind kind = Kind::kHolomorphic;
    int weight = 0;    // holomorphic only
    int index = 0;     // holomorphic only
    double r = 0.0;    // eisenstein/maass
    int sign = +1;     // maass
    std::vector<double> lam;

    std::int64_t n_max() const { return (std::int64_t)lam.size() - 1; }
    double operator()(std::int64_t n) const { return lam[n]; }
    // weight parameter entering the gamma factor (0 for non-holomorphic)
    int gamma_ell() const { return kind == Kind::kHolomorphic ? weight : 0; }
    bool is_cusp() const { return kind != Kind::kEisenstein; }
    bool is_eisenstein() const { return kind == Kind::kEisenstein; }
    std::string label() const;
};

FormTable table_of(const HeckeEigenform& g);
FormTable eisenstein_table(double r, std::int64_t n_max);
FormTable maass_table(const MaassFormInput& m);

struct RankinSeries {
    std::vector<double> coeff;  // coeff[m] = lambda_{f (x) g}(m), [0] unused
};
// lambda_{f8g}(m) = sum_{a b^2 = m} lambda_f(a) lambda_g(a); requires both
// base tables to cover a <= m_max (throws naming the needed range).
RankinSeries rankin_selberg_coeffs(const FormTable& f, const FormTable& g, std::int64_t m_max);

// max Hecke-relation defect over coprime pairs and prime-power triples
double hecke_relation_residual(const std::vector<double>& lam, std::int64_t n_bound);

// Victor-Miller exact basis re-export for callers that want ground truth
// (tests, cache verification); see series.hpp for the engine.

}  // namespace rslab
