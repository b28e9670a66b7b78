#include "rslab/circle.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

#include "rslab/arith.hpp"
#include "rslab/parallel.hpp"

namespace rslab {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;

// C^inf cutoff: 1 on [0, flat], 0 beyond flat + taper
double chi_taper(double x, double flat, double taper) {
    double ax = std::fabs(x);
    if (ax <= flat) return 1.0;
    if (ax >= flat + taper) return 0.0;
    double t = (ax - flat) / taper;
    auto f = [](double s) { return s > 0.0 ? std::exp(-1.0 / s) : 0.0; };
    double u = f(1.0 - t), v = f(t);
    return u / (u + v);
}
}  // namespace

struct DeltaInternals {
    // Delta_q(u) = sum_r (w(qr) - w(|u|/(qr)))/(qr)
    static double delta_q(const DeltaDecomposition& dd, int q, double u) {
        double Q = dd.q_;
        const SmoothWindow& w = dd.w_;
        double s = 0.0;
        for (std::int64_t r = 1; q * r <= (std::int64_t)Q + 1; ++r) s += w((double)(q * r)) / (double)(q * r);
        double au = std::fabs(u);
        if (au > 0.0) {
            std::int64_t rlo = std::max<std::int64_t>(1, (std::int64_t)(au / (q * Q)));
            std::int64_t rhi = (std::int64_t)(2.0 * au / (q * Q)) + 2;
            for (std::int64_t r = rlo; r <= rhi; ++r) s -= w(au / (double)(q * r)) / (double)(q * r);
        }
        return s;
    }
};

DeltaDecomposition::DeltaDecomposition(std::int64_t M)
    : m_(M), q_(2.0 * std::sqrt((double)M)), w_(SmoothWindow::bump(q_ / 2.0, q_)) {
    if (M < 4) throw std::invalid_argument("DeltaDecomposition: M >= 4");
    // normalize sum_{d >= 1} w(d) = 1
    double s = 0.0;
    for (std::int64_t d = 1; d <= (std::int64_t)q_ + 1; ++d) s += w_((double)d);
    if (s <= 0.0) throw std::runtime_error("DeltaDecomposition: empty bump");
    w_ = w_.scaled(1.0 / s);

    int qmax = (int)q_;
    per_q_.resize(qmax);
    const double flat = 2.0 * (double)m_;
    const double taper = (double)m_;
    const double vmax = flat + taper;
    const double u_cap = 240.0;

    parallel_for(qmax, [&](size_t qi) {
        int q = (int)qi + 1;
        QGrid& G = per_q_[qi];
        double qQ = q * q_;
        // v-grid: fine enough for cos(2 pi v u/(qQ)) at u = u_cap and for the
        // w/chi features
        double h_v = std::min({qQ / (4.0 * u_cap), q_ / 16.0, taper / 16.0});
        std::int64_t nv = (std::int64_t)(vmax / h_v) + 2;
        std::vector<double> Gv(nv);
        for (std::int64_t i = 0; i < nv; ++i) {
            double v = i * h_v;
            Gv[i] = DeltaInternals::delta_q(*this, q, v) * chi_taper(v, flat, taper);
        }
        // u-grid: alias-safe for |n| <= 2M plus the v-extent
        G.h_u = qQ / (4.0 * (flat + vmax));
        std::int64_t nu_cap = (std::int64_t)(u_cap / G.h_u) + 1;
        G.g.reserve(1024);
        int quiet = 0;
        for (std::int64_t j = 0; j <= nu_cap; ++j) {
            double xi = (j * G.h_u) / qQ;  // frequency of the transform
            // g(q,u) = 2 sum_{i>=1} G(v_i) cos(2 pi v_i u/(qQ)) h_v + G(0) h_v
            double ang = kTwoPi * h_v * xi;
            double cs = std::cos(ang), sn = std::sin(ang);
            double c = 1.0, snc = 0.0;
            double acc = 0.5 * Gv[0];
            for (std::int64_t i = 1; i < nv; ++i) {
                double cn = c * cs - snc * sn;
                snc = snc * cs + c * sn;
                c = cn;
                acc += Gv[i] * c;
            }
            G.g.push_back(2.0 * h_v * acc);
            if (std::fabs(G.g.back()) < 2e-9) ++quiet;
            else quiet = 0;
            if (quiet > (std::int64_t)(30.0 / G.h_u) && j > (std::int64_t)(40.0 / G.h_u)) break;
        }
    });
}

double DeltaDecomposition::g(int q, double u) const {
    if (q < 1 || q > (int)per_q_.size()) throw std::invalid_argument("g: q out of range");
    const QGrid& G = per_q_[q - 1];
    double x = std::fabs(u) / G.h_u;
    std::int64_t i = (std::int64_t)x;
    if (i + 1 >= (std::int64_t)G.g.size()) return 0.0;
    double f = x - i;
    return G.g[i] * (1.0 - f) + G.g[i + 1] * f;
}

double DeltaDecomposition::fourier_kernel(int q, double w) const {
    const QGrid& G = per_q_[q - 1];
    double qQ = q * q_;
    double ang = kTwoPi * w * G.h_u / qQ;
    double cs = std::cos(ang), sn = std::sin(ang);
    double c = 1.0, s = 0.0;
    double acc = 0.5 * G.g[0];
    for (size_t j = 1; j < G.g.size(); ++j) {
        double cn = c * cs - s * sn;
        s = s * cs + c * sn;
        c = cn;
        acc += G.g[j] * c;
    }
    return 2.0 * G.h_u * acc;
}

double DeltaDecomposition::delta(std::int64_t n) const {
    double total = 0.0;
    for (int q = 1; q <= (int)per_q_.size(); ++q) {
        double cq = (double)arith::ramanujan_sum((std::int64_t)std::llabs(n), q);
        if (cq == 0.0) continue;
        total += cq / (q * q_) * fourier_kernel(q, (double)n);
    }
    return total;
}

double DeltaDecomposition::worst_defect(std::int64_t range, std::int64_t* worst_n) const {
    if (range == 0) range = 2 * m_;
    double worst = -1.0;
    std::int64_t wn = 0;
    // delta(n) is even in n by construction (c_q even, kernel even)
    for (std::int64_t n = 0; n <= range; ++n) {
        double target = (n == 0) ? 1.0 : 0.0;
        double v = std::fabs(delta(n) - target);
        if (v > worst) {
            worst = v;
            wn = n;
        }
    }
    if (worst_n) *worst_n = wn;
    return worst;
}

GPropertiesReport g_properties_check(const DeltaDecomposition& dd) {
    GPropertiesReport rep;
    rep.M = dd.M();
    rep.Q = dd.Q();
    double log2q = std::pow(std::log(dd.Q()), 2);
    for (int q = 1; q <= dd.q_count(); ++q) {
        double h = dd.u_step(q);
        double um = dd.u_max(q);
        double s = 0.0;
        for (double u = -um; u <= um; u += h) {
            double g = dd.g(q, u);
            s += (std::fabs(g) + g * g) * h;
        }
        rep.l1l2_integral.push_back(s);
        rep.worst_l1l2 = std::max(rep.worst_l1l2, s);
    }
    rep.l1l2_over_log2q = rep.worst_l1l2 / log2q;
    // flatness region: q <= Q^{3/4}, |u| <= Q^{-1/4}
    double qflat = std::pow(dd.Q(), 0.75);
    double uflat = std::pow(dd.Q(), -0.25);
    for (int q = 1; q <= (int)qflat && q <= dd.q_count(); ++q)
        for (double u = 0.0; u <= uflat; u += uflat / 8.0)
            rep.flatness_small_qu = std::max(rep.flatness_small_qu, std::fabs(dd.g(q, u) - 1.0));
    for (int q = 1; q <= dd.q_count(); ++q)
        rep.tail_decay_at_10 = std::max(rep.tail_decay_at_10, std::fabs(dd.g(q, 10.0)));
    return rep;
}

double shifted_sum_direct(const FormTable& f, const FormTable& g, std::int64_t h, std::int64_t N,
                          const SmoothWindow& W) {
    if (h < 1) throw std::invalid_argument("shifted_sum_direct: need h >= 1");
    if (h > N) throw std::invalid_argument("shifted_sum_direct: need h <= N");
    std::int64_t lo = std::max<std::int64_t>(1, (std::int64_t)std::floor(W.lo() * N));
    std::int64_t hi = (std::int64_t)std::ceil(W.hi() * N);
    if (f.n_max() < hi || g.n_max() < hi + h) {
        throw std::invalid_argument("shifted_sum_direct: tables must cover n <= " +
                                    std::to_string(hi + h));
    }
    double s = 0.0;
    for (std::int64_t n = lo; n <= hi; ++n) {
        double w = W((double)n / (double)N);
        if (w != 0.0) s += f(n) * g(n + h) * w;
    }
    return s;
}

DecomposedSum shifted_sum_decomposed(const FormTable& f, const FormTable& g, std::int64_t h,
                                     std::int64_t N, const SmoothWindow& W, const SmoothWindow& V) {
    if (h < 1) throw std::invalid_argument("shifted_sum_decomposed: need h >= 1 (Theorem window)");
    std::int64_t nlo = std::max<std::int64_t>(1, (std::int64_t)std::floor(W.lo() * N));
    std::int64_t nhi = (std::int64_t)std::ceil(W.hi() * N);
    std::int64_t mlo = std::max<std::int64_t>(1, (std::int64_t)std::floor(V.lo() * N));
    std::int64_t mhi = (std::int64_t)std::ceil(V.hi() * N);
    if (f.n_max() < nhi || g.n_max() < mhi)
        throw std::invalid_argument("shifted_sum_decomposed: tables too short");
    std::int64_t span = std::max(std::llabs(nhi + h - mlo), std::llabs(mhi - nlo - h));
    std::int64_t M = span / 2 + 1;
    DecomposedSum out;
    out.M = M;
    DeltaDecomposition dd(M);
    if (2 * dd.M() < span) throw std::runtime_error("shifted_sum_decomposed: M too small for range");

    double Q = dd.Q();
    double total = 0.0;
    double l1f = 0.0, l1g = 0.0;
    for (std::int64_t n = nlo; n <= nhi; ++n) l1f += std::fabs(f(n)) * W((double)n / N);
    for (std::int64_t m = mlo; m <= mhi; ++m) l1g += std::fabs(g(m)) * V((double)m / N);

    for (int q = 1; q <= dd.q_count(); ++q) {
        double qQ = q * Q;
        double h_u = dd.u_step(q);
        std::int64_t nu = (std::int64_t)(dd.u_max(q) / h_u);
        // residue-class sums P_f(rho; u) = sum_{n = rho (q)} lambda_f(n) W e(nu/(qQ))
        // computed per u by phase stepping; then the a-sum collapses to
        // Ramanujan sums of h + rho - sigma
        double contrib = 0.0;
        std::vector<std::complex<double>> Pf(q), Pg(q);
        // precompute Ramanujan sums C_q(t), t mod q
        std::vector<double> cq(q);
        for (int t = 0; t < q; ++t) cq[t] = (double)arith::ramanujan_sum(t, q);
        for (std::int64_t j = -nu; j <= nu; ++j) {
            double u = j * h_u;
            double gval = dd.g(q, u);
            if (std::fabs(gval) < 1e-12) continue;
            for (auto& z : Pf) z = 0.0;
            for (auto& z : Pg) z = 0.0;
            {
                double ang = kTwoPi * u / qQ;
                std::complex<double> rot(std::cos(ang), std::sin(ang));
                std::complex<double> ph = std::exp(std::complex<double>(0.0, ang * (double)nlo));
                for (std::int64_t n = nlo; n <= nhi; ++n) {
                    double w = W((double)n / N);
                    if (w != 0.0) Pf[n % q] += f(n) * w * ph;
                    ph *= rot;
                }
                std::complex<double> phm = std::exp(std::complex<double>(0.0, -ang * (double)mlo));
                std::complex<double> rotm = std::conj(rot);
                for (std::int64_t m = mlo; m <= mhi; ++m) {
                    double w = V((double)m / N);
                    if (w != 0.0) Pg[m % q] += g(m) * w * phm;
                    phm *= rotm;
                }
            }
            // e(hu/(qQ)) phase
            double angh = kTwoPi * u * (double)h / qQ;
            std::complex<double> eh(std::cos(angh), std::sin(angh));
            std::complex<double> inner(0.0, 0.0);
            for (int rho = 0; rho < q; ++rho) {
                if (Pf[rho] == std::complex<double>(0.0, 0.0)) continue;
                for (int sig = 0; sig < q; ++sig) {
                    int t = (int)(((std::int64_t)h + rho - sig) % q);
                    if (t < 0) t += q;
                    inner += Pf[rho] * Pg[sig] * cq[t];
                }
            }
            contrib += (eh * inner).real() * gval * h_u;
        }
        total += contrib / qQ;
    }
    out.value = total;
    out.direct = shifted_sum_direct(f, g, h, N, W);
    out.defect_bound = dd.worst_defect() * l1f * l1g;
    return out;
}

ShiftedSumReport shifted_exponent(const FormTable& f, const FormTable& g, std::int64_t h,
                                  const std::vector<std::int64_t>& N_list, const SmoothWindow& W) {
    if (N_list.size() < 5) throw std::invalid_argument("shifted_exponent: need >= 5 dyadic N values");
    ShiftedSumReport rep;
    rep.f_label = f.label();
    rep.g_label = g.label();
    rep.h = h;
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int used = 0;
    for (auto N : N_list) {
        double S = shifted_sum_direct(f, g, h, N, W);
        rep.N.push_back(N);
        rep.S.push_back(S);
        if (std::fabs(S) < 1e-12) continue;
        double x = std::log((double)N), y = std::log(std::fabs(S));
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        ++used;
    }
    if (used < 3) throw std::runtime_error("shifted_exponent: fewer than 3 usable points");
    rep.used_points = used;
    double denom = used * sxx - sx * sx;
    rep.slope = (used * sxy - sx * sy) / denom;
    double icept = (sy - rep.slope * sx) / used;
    double rss = 0.0;
    for (size_t i = 0; i < rep.N.size(); ++i) {
        if (std::fabs(rep.S[i]) < 1e-12) continue;
        double e = std::log(std::fabs(rep.S[i])) - (icept + rep.slope * std::log((double)rep.N[i]));
        rss += e * e;
    }
    rep.residual = std::sqrt(rss / used);
    return rep;
}

TransformProbe integral_transform_probe(const DeltaDecomposition& dd, int q, std::int64_t n,
                                        std::int64_t m, std::int64_t N, std::int64_t h) {
    TransformProbe out;
    double Q = dd.Q();
    double qQ = q * Q;
    out.bound_qQ = q / Q;
    // I = int int W(x)V(y) e(2 sqrt(nNx)/q - 2 sqrt(mNy)/q) K_q(h + N(y-x)) dx dy
    // with K_q(w) = int g(q,u) e(uw/(qQ)) du
    SmoothWindow W = SmoothWindow::plateau(0.5, 1.0, 2.0, 3.0);
    SmoothWindow V = W;
    // xy quadrature resolving both the sqrt-phases and K_q's localization
    double freq = (std::sqrt((double)n * N) + std::sqrt((double)m * N)) / q;
    int base = 600;
    int nx = base + (int)(2.5 * freq);
    int ny = base + (int)(std::max(8.0 * N / qQ, 2.5 * freq));
    double xlo = W.lo(), xhi = W.hi();
    // K_q(w) tabulated on a uniform w-grid (it varies on scale ~ qQ/20)
    double wmax = (double)h + (double)N * (xhi - xlo) + 1.0;
    double hw = qQ / 64.0;
    std::int64_t nw = (std::int64_t)(wmax / hw) + 2;
    std::vector<double> ktab(2 * nw + 1);
    for (std::int64_t i = -nw; i <= nw; ++i) ktab[i + nw] = dd.fourier_kernel(q, i * hw);
    auto kq = [&](double w) {
        double x = w / hw + nw;
        std::int64_t i = (std::int64_t)x;
        if (i < 0 || i + 1 > 2 * nw) return 0.0;
        double fr = x - i;
        return ktab[i] * (1.0 - fr) + ktab[i + 1] * fr;
    };
    std::complex<double> acc(0.0, 0.0);
    double hx = (xhi - xlo) / nx, hy = (xhi - xlo) / ny;
    double mass_in = 0.0, mass_out = 0.0;
    for (int i = 0; i <= nx; ++i) {
        double x = xlo + i * hx;
        double wx = W(x) * ((i == 0 || i == nx) ? 0.5 : 1.0);
        if (wx == 0.0) continue;
        for (int j = 0; j <= ny; ++j) {
            double y = xlo + j * hy;
            double wy = V(y) * ((j == 0 || j == ny) ? 0.5 : 1.0);
            if (wy == 0.0) continue;
            double w = (double)h + (double)N * (y - x);
            double ker = kq(w);
            double ph = 2.0 * (std::sqrt((double)n * N * x) - std::sqrt((double)m * N * y)) / q;
            acc += wx * wy * ker * std::exp(std::complex<double>(0.0, kTwoPi * ph));
            if (std::fabs(w) <= qQ * std::pow(std::log(Q), 2))
                mass_in += std::fabs(ker) * wx * wy;
            else
                mass_out += std::fabs(ker) * wx * wy;
        }
    }
    acc *= hx * hy;
    out.magnitude = std::abs(acc);
    out.kernel_mass_outside = mass_out / std::max(mass_in + mass_out, 1e-300);
    // flat-g sanity: with g == 1 on [-umax, umax] the kernel is a sinc
    {
        int qq = q;
        double um = dd.u_max(qq);
        double wtest = 0.37 * qQ;
        double closed = (wtest == 0.0) ? 2.0 * um
                                       : std::sin(kTwoPi * wtest * um / qQ) / (M_PI * wtest / qQ);
        // quadrature with g replaced by 1 on the same grid
        double hstep = dd.u_step(qq);
        std::int64_t nu = (std::int64_t)(um / hstep);
        double accf = 0.5;
        double ang = kTwoPi * wtest * hstep / qQ;
        double cs = std::cos(ang), sn = std::sin(ang), c = 1.0, s = 0.0;
        for (std::int64_t jj = 1; jj <= nu; ++jj) {
            double cn = c * cs - s * sn;
            s = s * cs + c * sn;
            c = cn;
            accf += c;
        }
        double quadv = 2.0 * hstep * accf;
        out.flat_vs_closed = std::fabs(quadv - closed);
    }
    return out;
}

}  // namespace rslab
