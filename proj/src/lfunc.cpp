#include "rslab/lfunc.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "rslab/zeta.hpp"

namespace rslab {

namespace {
constexpr double kZeta2 = 1.6449340668482264364724151666460;  // pi^2/6

// y beyond which envelope(y) < floor
double dead_point(const AfeWeight& W, double floor_val) {
    double y = 1.0;
    while (W.envelope(y) >= floor_val && y < 1e15) y *= 2.0;
    double lo = y / 2.0, hi = y;
    for (int i = 0; i < 50; ++i) {
        double mid = std::sqrt(lo * hi);
        (W.envelope(mid) < floor_val ? hi : lo) = mid;
    }
    return hi;
}
}  // namespace

LValue central_lvalue(const FormTable& f, const FormTable& g, double eps) {
    if (g.kind != FormTable::Kind::kHolomorphic)
        throw std::invalid_argument("central_lvalue: averaged form must be holomorphic");
    const AfeWeight& U = afe_weight_for(g.weight, f.gamma_ell());
    std::int64_t M = U.certified_mcut(eps);
    if (f.n_max() < M || g.n_max() < M) {
        std::ostringstream os;
        os << "central_lvalue: tables must cover m <= " << M << " (have " << f.n_max() << ", "
           << g.n_max() << ") for k=" << g.weight << ", ell=" << f.gamma_ell();
        throw std::invalid_argument(os.str());
    }
    // sum over m = a b^2 without materializing the Rankin coefficients
    double total = 0.0;
    std::int64_t terms = 0;
    for (std::int64_t b = 1; b * b <= M; ++b) {
        double sb = 0.0;
        std::int64_t b2 = b * b;
        for (std::int64_t a = 1; a * b2 <= M; ++a) {
            double m = static_cast<double>(a * b2);
            sb += f(a) * g(a) / std::sqrt(m) * U(m);
            ++terms;
        }
        total += sb;
    }
    LValue out;
    out.value = 2.0 * total;
    out.trunc_bound = U.tail_bound(static_cast<double>(M));
    out.terms = terms;
    return out;
}

LOneValue l_one(const FormTable& f, const FormTable& h, LOneMode mode) {
    if (mode == LOneMode::kRankin) {
        if (f.is_eisenstein() && h.is_eisenstein())
            throw std::invalid_argument("l_one: both forms Eisenstein (poles merge; use the constant table)");
        if (f.label() == h.label())
            throw std::invalid_argument("l_one: L(s, f x f) has a pole at s = 1");
    }
    // smoothed partial sums with exponential taper at cutoff X, three X's,
    // Richardson-style extrapolation in X^{-1/2}
    auto smoothed = [&](double X) {
        double s = 0.0;
        if (mode == LOneMode::kRankin) {
            std::int64_t top = (std::int64_t)(3.0 * X);
            for (std::int64_t b = 1; b * b <= top; ++b) {
                std::int64_t b2 = b * b;
                for (std::int64_t a = 1; a * b2 <= top; ++a) {
                    double m = static_cast<double>(a * b2);
                    double t = m / X;
                    double w = t <= 1.0 ? 1.0 : std::exp(-(t - 1.0) * (t - 1.0) * 4.0);
                    s += f(a) * h(a) / m * w;
                }
            }
        } else {
            std::int64_t top = (std::int64_t)(3.0 * X);
            for (std::int64_t n = 1; n * n <= f.n_max() && n <= top; ++n) {
                double t = static_cast<double>(n) / X;
                double w = t <= 1.0 ? 1.0 : std::exp(-(t - 1.0) * (t - 1.0) * 4.0);
                s += f(n * n) / static_cast<double>(n) * w;
            }
        }
        return kZeta2 * s;
    };
    double Xmax = (mode == LOneMode::kSym2)
                      ? std::sqrt((double)f.n_max())
                      : (double)std::min(f.n_max(), h.n_max());
    Xmax = Xmax / 3.0;
    double v4 = smoothed(Xmax), v2 = smoothed(Xmax / 2.0), v1 = smoothed(Xmax / 4.0);
    // Richardson in X^{-1/2}: v(X) ~ L + c X^{-1/2}
    double r = std::sqrt(2.0);
    double e42 = (r * v4 - v2) / (r - 1.0);
    double e21 = (r * v2 - v1) / (r - 1.0);
    LOneValue out;
    out.value = e42;
    out.error_estimate = std::fabs(e42 - e21) + std::fabs(v4 - v2) * 0.25;
    return out;
}

DiagonalValue diagonal_dk(const FormTable& f, const FormTable& h, int k, double eps) {
    const AfeWeight& U = afe_weight_for(k, f.gamma_ell());
    const AfeWeight& V = afe_weight_for(k, h.gamma_ell());

    const double ydead_u = dead_point(U, 1e-18);
    const double ydead_v = dead_point(V, 1e-18);

    // per-a kernel T_U(a) = sum_b U(a b^2)/b, truncated where the envelope
    // certifies the remaining b-tail is negligible
    auto t_sum = [](const AfeWeight& W, double a, double ydead) {
        double s = 0.0;
        std::int64_t bmax = (std::int64_t)std::sqrt(std::max(1.0, ydead / a)) + 1;
        for (std::int64_t b = 1; b <= bmax; ++b)
            s += W(a * (double)b * (double)b) / static_cast<double>(b);
        return s;
    };
    // |T_W(a)| upper bound by envelope (monotone decreasing in a)
    auto t_bound = [](const AfeWeight& W, double a, double ydead) {
        double s = 0.0;
        std::int64_t bmax = (std::int64_t)std::sqrt(std::max(1.0, ydead / a)) + 1;
        for (std::int64_t b = 1; b <= bmax; ++b)
            s += std::min(1.5, W.envelope(a * (double)b * (double)b)) / static_cast<double>(b);
        return s + 2e-18;  // tail beyond bmax
    };

    // choose the a-cutoff: tail over a > Y of d(a)^2/a T_U T_V, bounded with
    // D2(x) = sum d(a)^2 <= x (1+ln x)^3 and a log-grid upper integral
    auto tail_over = [&](double Y) {
        double s = 0.0;
        double t = Y;
        double fac = 1.10;
        for (int i = 0; i < 400 && t < 1e12; ++i) {
            double tb = t_bound(U, t, ydead_u) * t_bound(V, t, ydead_v);
            double dcount = (t * fac - t) * std::pow(1.0 + std::log(t * fac), 3.0) * 4.0;
            // sum_{t<a<=t*fac} d(a)^2/a <= dcount / t (divisor-density bound)
            s += tb * dcount / t;
            if (tb * dcount / t < 1e-18 * std::max(s, 1e-12) && i > 4) break;
            t *= fac;
        }
        return s;
    };

    double Y = 256.0;
    while (tail_over(Y) >= eps) {
        Y *= 1.3;
        if (Y > 5.0e7) throw std::runtime_error("diagonal_dk: cannot certify tail");
    }
    std::int64_t a_cut = (std::int64_t)Y;
    if (f.n_max() < a_cut || h.n_max() < a_cut) {
        std::ostringstream os;
        os << "diagonal_dk: tables must cover a <= " << a_cut;
        throw std::invalid_argument(os.str());
    }
    double total = 0.0;
    for (std::int64_t a = 1; a <= a_cut; ++a) {
        double c = f(a) * h(a);
        if (c == 0.0) continue;
        double ad = static_cast<double>(a);
        total += c / ad * t_sum(U, ad, ydead_u) * t_sum(V, ad, ydead_v);
    }
    DiagonalValue out;
    out.value = total;
    out.tail_bound = tail_over(Y);
    out.a_cut = a_cut;
    return out;
}

LeadingConstant leading_constant(const FormTable& f, const FormTable& h) {
    LeadingConstant out;
    bool fe = f.is_eisenstein(), he = h.is_eisenstein();
    if (fe && he) {
        if (f.r == 0.0 && h.r == 0.0) {
            out.lemma_value = 1.0 / (6.0 * kZeta2);
            out.degree = 6;
            out.kase = "E0 x E0";
        } else if (std::fabs(std::fabs(f.r) - std::fabs(h.r)) < 1e-12 && f.r != 0.0) {
            auto z = zeta(std::complex<double>(1.0, 2.0 * f.r));
            out.lemma_value = std::norm(z) / (2.0 * kZeta2);
            out.degree = 4;
            out.kase = "E_r x E_r (r != 0)";
        } else {
            throw std::invalid_argument("leading_constant: distinct Eisenstein parameters match no table case");
        }
    } else if (f.label() == h.label()) {
        out.lemma_value = l_one(f, h, LOneMode::kSym2).value / (2.0 * kZeta2);
        out.degree = 3;
        out.kase = "h = conj(f) cuspidal";
    } else {
        out.lemma_value = l_one(f, h, LOneMode::kRankin).value / (4.0 * kZeta2);
        out.degree = 2;
        out.kase = "h != conj(f), at least one cusp form";
    }
    out.theorem_value = 2.0 * out.lemma_value;
    return out;
}

}  // namespace rslab
