#pragma once
// Small least-squares helpers for the log-polynomial D_k fits and the
// exponent measurements.

#include <cmath>
#include <stdexcept>
#include <vector>

namespace rslab::fit {

// least-squares polynomial fit, normal equations in long double
inline std::vector<double> polyfit(const std::vector<double>& x, const std::vector<double>& y,
                                   int deg, double* rms = nullptr) {
    int n = (int)x.size();
    if (n < deg + 1) throw std::invalid_argument("polyfit: not enough points");
    int m = deg + 1;
    std::vector<std::vector<long double>> A(m, std::vector<long double>(m + 1, 0.0L));
    for (int i = 0; i < n; ++i) {
        long double xp = 1.0L;
        std::vector<long double> pow(2 * m - 1);
        for (int p = 0; p < 2 * m - 1; ++p) {
            pow[p] = xp;
            xp *= x[i];
        }
        for (int r = 0; r < m; ++r) {
            for (int c = 0; c < m; ++c) A[r][c] += pow[r + c];
            A[r][m] += pow[r] * y[i];
        }
    }
    for (int col = 0; col < m; ++col) {
        int best = col;
        for (int r = col + 1; r < m; ++r)
            if (std::fabs((double)A[r][col]) > std::fabs((double)A[best][col])) best = r;
        std::swap(A[best], A[col]);
        if (A[col][col] == 0.0L) throw std::runtime_error("polyfit: singular system");
        for (int r = 0; r < m; ++r) {
            if (r == col) continue;
            long double f = A[r][col] / A[col][col];
            for (int c = col; c <= m; ++c) A[r][c] -= f * A[col][c];
        }
    }
    std::vector<double> coef(m);
    for (int i = 0; i < m; ++i) coef[i] = (double)(A[i][m] / A[i][i]);
    if (rms) {
        long double ss = 0.0L;
        for (int i = 0; i < n; ++i) {
            long double v = 0.0L, xp = 1.0L;
            for (int p = 0; p < m; ++p) {
                v += coef[p] * xp;
                xp *= x[i];
            }
            ss += (v - y[i]) * (v - y[i]);
        }
        *rms = std::sqrt((double)(ss / n));
    }
    return coef;
}

// smallest degree d <= maxdeg such that moving to d+1 improves the rms by
// less than `gain` (relative); also writes the rms ladder when asked
inline int pick_degree(const std::vector<double>& x, const std::vector<double>& y, int maxdeg,
                       double gain = 0.10, std::vector<double>* rms_ladder = nullptr) {
    std::vector<double> ladder;
    for (int d = 0; d <= maxdeg + 1 && d + 1 < (int)x.size(); ++d) {
        double rms = 0.0;
        polyfit(x, y, d, &rms);
        ladder.push_back(rms);
    }
    if (rms_ladder) *rms_ladder = ladder;
    for (int d = 0; d + 1 < (int)ladder.size(); ++d) {
        if (ladder[d + 1] > (1.0 - gain) * ladder[d]) return d;
    }
    return std::min<int>(maxdeg, (int)ladder.size() - 1);
}

}  // namespace rslab::fit
