#include "rslab/forms.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "rslab/series.hpp"

namespace rslab {

namespace {

// characteristic polynomial of a small integer matrix (mpz), by permutation
// expansion; fine for dim <= 5
std::vector<mpz_class> char_poly(const std::vector<std::vector<mpz_class>>& M) {
    int d = (int)M.size();
    // det(x I - M) via recursive expansion of the symbolic matrix: store
    // polynomials as coefficient vectors
    using Poly = std::vector<mpz_class>;
    auto pmul = [](const Poly& a, const Poly& b) {
        Poly c(a.size() + b.size() - 1);
        for (size_t i = 0; i < a.size(); ++i)
            for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
        return c;
    };
    auto padd = [](Poly a, const Poly& b) {
        if (b.size() > a.size()) a.resize(b.size());
        for (size_t i = 0; i < b.size(); ++i) a[i] += b[i];
        return a;
    };
    // entries of xI - M as degree<=1 polys
    std::vector<std::vector<Poly>> A(d, std::vector<Poly>(d));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            Poly p{-M[i][j]};
            if (i == j) p.push_back(1);
            A[i][j] = p;
        }
    // Laplace expansion over first column, recursive lambda
    std::function<Poly(std::vector<int>)> det = [&](std::vector<int> rows) -> Poly {
        int n = (int)rows.size();
        int col = d - n;
        if (n == 1) return A[rows[0]][col];
        Poly acc{mpz_class(0)};
        for (int i = 0; i < n; ++i) {
            std::vector<int> rest;
            for (int j = 0; j < n; ++j)
                if (j != i) rest.push_back(rows[j]);
            Poly sub = det(rest);
            Poly term = pmul(A[rows[i]][col], sub);
            if (i % 2 == 1)
                for (auto& c : term) c = -c;
            acc = padd(acc, term);
        }
        return acc;
    };
    std::vector<int> rows(d);
    std::iota(rows.begin(), rows.end(), 0);
    return det(rows);
}

long double poly_eval(const std::vector<long double>& c, long double x) {
    long double v = 0.0L;
    for (size_t i = c.size(); i-- > 0;) v = v * x + c[i];
    return v;
}

}  // namespace

std::vector<HeckeEigenform> hecke_eigenforms(int k, std::int64_t n_max) {
    if (k < 12 || k % 2 != 0) return {};
    int d = series::dim_cusp(k);
    if (d == 0) return {};
    if (n_max < std::max(2, 2 * d)) throw std::invalid_argument("hecke_eigenforms: n_max too small");

    // exact small basis for the Hecke data
    int n_small = std::max(2 * d + 2, 16);
    auto basis_z = series::victor_miller_z(k, n_small);

    // T_2 matrix: (T_2 f_j)(q^i) = a_j(2i) + 2^{k-1} a_j(i/2)
    mpz_class two_k1;
    mpz_ui_pow_ui(two_k1.get_mpz_t(), 2, k - 1);
    std::vector<std::vector<mpz_class>> M(d, std::vector<mpz_class>(d));
    for (int j = 0; j < d; ++j)
        for (int i = 1; i <= d; ++i) {
            mpz_class v = basis_z[j][2 * i];
            if (i % 2 == 0) v += two_k1 * basis_z[j][i / 2];
            M[i - 1][j] = v;
        }

    auto cp = char_poly(M);
    std::vector<long double> cl(cp.size());
    for (size_t i = 0; i < cp.size(); ++i) {
        // mpz -> long double via mantissa + exponent
        signed long int e2;
        double m = mpz_get_d_2exp(&e2, cp[i].get_mpz_t());
        cl[i] = (long double)m * std::pow(2.0L, (long double)e2);
    }

    // roots: real, simple (Maeda at level 1); bracket on the Deligne disc
    long double R = 2.0L * std::pow(2.0L, 0.5L * (k - 1)) * 1.5L + 1.0L;
    int grid = 20000;
    std::vector<long double> roots;
    long double prev_x = -R, prev_v = poly_eval(cl, prev_x);
    for (int i = 1; i <= grid; ++i) {
        long double x = -R + 2.0L * R * i / grid;
        long double v = poly_eval(cl, x);
        if ((prev_v < 0 && v > 0) || (prev_v > 0 && v < 0) || v == 0.0L) {
            long double a = prev_x, b = x;
            for (int it = 0; it < 200; ++it) {
                long double mid = 0.5L * (a + b);
                long double vm = poly_eval(cl, mid);
                if ((vm < 0) == (poly_eval(cl, a) < 0)) a = mid;
                else b = mid;
            }
            roots.push_back(0.5L * (a + b));
        }
        prev_x = x;
        prev_v = v;
    }
    if ((int)roots.size() != d)
        throw std::runtime_error("hecke_eigenforms: T_2 root count mismatch (grid too coarse?)");
    for (int i = 0; i + 1 < d; ++i)
        if (std::fabs((double)(roots[i + 1] - roots[i])) < 1e-8 * (double)R)
            throw std::runtime_error("hecke_eigenforms: clustered T_2 eigenvalues");

    // long coefficient tables for the echelon basis
    std::vector<std::vector<double>> basis_long;
    if (n_max <= 4096) {
        auto bz = series::victor_miller_z(k, (int)n_max);
        basis_long.assign(d, std::vector<double>(n_max + 1, 0.0));
        for (int i = 0; i < d; ++i)
            for (std::int64_t m = 0; m <= n_max; ++m) {
                signed long int e2;
                double mm = mpz_get_d_2exp(&e2, bz[i][m].get_mpz_t());
                basis_long[i][m] = (double)((long double)mm * std::pow(2.0L, (long double)e2));
            }
    } else {
        basis_long = series::victor_miller_long(k, n_max);
    }

    std::vector<HeckeEigenform> out;
    for (int r = 0; r < d; ++r) {
        long double lam2raw = roots[r];
        // eigenvector of M (long double) for eigenvalue lam2raw
        std::vector<std::vector<long double>> A(d, std::vector<long double>(d));
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) {
                signed long int e2;
                double mm = mpz_get_d_2exp(&e2, M[i][j].get_mpz_t());
                A[i][j] = (long double)mm * std::pow(2.0L, (long double)e2);
                if (i == j) A[i][j] -= lam2raw;
            }
        // null vector by Gaussian elimination with partial pivoting
        std::vector<int> piv;
        std::vector<long double> v(d, 0.0L);
        {
            std::vector<std::vector<long double>> B = A;
            std::vector<int> colperm(d);
            std::iota(colperm.begin(), colperm.end(), 0);
            int row = 0;
            std::vector<int> pivcol;
            for (int col = 0; col < d && row < d - 0; ++col) {
                int best = -1;
                long double bv = 0.0L;
                for (int i = row; i < d; ++i)
                    if (std::fabs((double)B[i][col]) > (double)bv) {
                        bv = std::fabs((double)B[i][col]);
                        best = i;
                    }
                if (best < 0 || bv < 1e-18L) continue;  // free column
                std::swap(B[best], B[row]);
                for (int i = 0; i < d; ++i) {
                    if (i == row) continue;
                    long double f = B[i][col] / B[row][col];
                    for (int j = 0; j < d; ++j) B[i][j] -= f * B[row][j];
                }
                pivcol.push_back(col);
                ++row;
            }
            // pick the free column as -1, back-substitute
            std::vector<bool> is_piv(d, false);
            for (int c : pivcol) is_piv[c] = true;
            int freec = -1;
            for (int c = 0; c < d; ++c)
                if (!is_piv[c]) freec = c;
            if (freec < 0) freec = d - 1;
            v[freec] = 1.0L;
            for (int rr = (int)pivcol.size() - 1; rr >= 0; --rr) {
                int c = pivcol[rr];
                long double s = 0.0L;
                for (int j = 0; j < d; ++j)
                    if (j != c) s += B[rr][j] * v[j];
                v[c] = -s / B[rr][c];
            }
        }
        if (std::fabs((double)v[0]) < 1e-14)
            throw std::runtime_error("hecke_eigenforms: eigenvector has vanishing a(1)");
        for (int i = d - 1; i >= 0; --i) v[i] /= v[0];

        HeckeEigenform g;
        g.weight = k;
        g.lam.assign(n_max + 1, 0.0);
        long double half = 0.5L * (k - 1);
        for (std::int64_t n = 1; n <= n_max; ++n) {
            long double a = 0.0L;
            for (int i = 0; i < d; ++i) a += v[i] * (long double)basis_long[i][n];
            g.lam[n] = (double)(a * std::exp(-half * std::log((long double)n)));
        }
        out.push_back(std::move(g));
    }
    std::sort(out.begin(), out.end(),
              [](const HeckeEigenform& a, const HeckeEigenform& b) { return a.lam[2] < b.lam[2]; });
    for (int i = 0; i < d; ++i) out[i].index = i;
    for (int i = 0; i + 1 < d; ++i)
        if (std::fabs(out[i].lam[2] - out[i + 1].lam[2]) < 1e-10)
            throw std::runtime_error("hecke_eigenforms: lambda(2) tie");
    return out;
}

std::vector<double> eisenstein_coeffs(double r, std::int64_t n_max) {
    if (n_max < 1) throw std::invalid_argument("eisenstein_coeffs: n_max >= 1");
    std::vector<double> lam(n_max + 1, 0.0);
    // lambda(n) = sum_{d | n} cos(r log(n/d^2)) counting each divisor once
    for (std::int64_t d = 1; d <= n_max; ++d) {
        double ld = std::log((double)d);
        for (std::int64_t m = d; m <= n_max; m += d) {
            lam[m] += (r == 0.0) ? 1.0 : std::cos(r * (std::log((double)m) - 2.0 * ld));
        }
    }
    return lam;
}

MaassFormInput load_maass_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("load_maass_file: cannot open " + path);
    MaassFormInput f;
    std::vector<std::pair<std::int64_t, double>> rows;
    std::string line;
    bool have_r = false;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line[0] == '#') {
            std::istringstream hs(line.substr(1));
            std::string key;
            while (hs >> key) {
                if (key == "r") { hs >> f.r; have_r = true; }
                else if (key == "sign") hs >> f.sign;
            }
            continue;
        }
        auto comma = line.find(',');
        if (comma == std::string::npos) continue;
        rows.emplace_back(std::stoll(line.substr(0, comma)), std::stod(line.substr(comma + 1)));
    }
    if (!have_r) throw std::runtime_error("load_maass_file: missing '# r ...' header");
    if (f.sign != 1 && f.sign != -1) throw std::runtime_error("load_maass_file: sign must be +-1");
    std::int64_t n_max = 0;
    for (auto& [n, v] : rows) n_max = std::max(n_max, n);
    f.lam.assign(n_max + 1, 0.0);
    for (auto& [n, v] : rows) f.lam[n] = v;
    if (n_max < 1 || std::fabs(f.lam[1] - 1.0) > 1e-12)
        throw std::runtime_error("load_maass_file: table must be normalized with lambda(1) = 1");
    f.mult_residual = hecke_relation_residual(f.lam, std::min<std::int64_t>(n_max, 1000));
    return f;
}

std::string FormTable::label() const {
    std::ostringstream os;
    switch (kind) {
        case Kind::kHolomorphic: os << "w" << weight << ":" << index; break;
        case Kind::kEisenstein: os << "E:" << r; break;
        case Kind::kMaass: os << "maass(r=" << r << ",eps=" << sign << ")"; break;
    }
    return os.str();
}

FormTable table_of(const HeckeEigenform& g) {
    FormTable t;
    t.kind = FormTable::Kind::kHolomorphic;
    t.weight = g.weight;
    t.index = g.index;
    t.lam = g.lam;
    return t;
}

FormTable eisenstein_table(double r, std::int64_t n_max) {
    FormTable t;
    t.kind = FormTable::Kind::kEisenstein;
    t.r = r;
    t.lam = eisenstein_coeffs(r, n_max);
    return t;
}

FormTable maass_table(const MaassFormInput& m) {
    FormTable t;
    t.kind = FormTable::Kind::kMaass;
    t.r = m.r;
    t.sign = m.sign;
    t.lam = m.lam;
    return t;
}

RankinSeries rankin_selberg_coeffs(const FormTable& f, const FormTable& g, std::int64_t m_max) {
    if (f.n_max() < m_max || g.n_max() < m_max) {
        std::ostringstream os;
        os << "rankin_selberg_coeffs: base tables must cover a <= " << m_max << " (have "
           << f.n_max() << ", " << g.n_max() << ")";
        throw std::invalid_argument(os.str());
    }
    RankinSeries rs;
    rs.coeff.assign(m_max + 1, 0.0);
    for (std::int64_t b = 1; b * b <= m_max; ++b) {
        std::int64_t b2 = b * b;
        for (std::int64_t a = 1; a * b2 <= m_max; ++a) rs.coeff[a * b2] += f(a) * g(a);
    }
    return rs;
}

double hecke_relation_residual(const std::vector<double>& lam, std::int64_t n_bound) {
    std::int64_t n_max = (std::int64_t)lam.size() - 1;
    n_bound = std::min(n_bound, n_max);
    double worst = 0.0;
    // multiplicativity on coprime pairs
    for (std::int64_t m = 2; m * 2 <= n_bound; ++m) {
        for (std::int64_t n = m + 1; m * n <= n_bound; ++n) {
            if (std::gcd(m, n) != 1) continue;
            worst = std::max(worst, std::fabs(lam[m * n] - lam[m] * lam[n]));
        }
    }
    // prime-power recursion lambda(p)lambda(p^j) = lambda(p^{j+1}) + lambda(p^{j-1})
    for (std::int64_t p = 2; p * p <= n_bound; ++p) {
        bool prime = true;
        for (std::int64_t q = 2; q * q <= p; ++q)
            if (p % q == 0) { prime = false; break; }
        if (!prime) continue;
        std::int64_t pj = p;
        while (pj * p <= n_bound) {
            double lhs = lam[p] * lam[pj];
            double rhs = lam[pj * p] + lam[pj / p];
            worst = std::max(worst, std::fabs(lhs - rhs));
            pj *= p;
        }
    }
    return worst;
}

}  // namespace rslab
