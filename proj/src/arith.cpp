#include "rslab/arith.hpp"

#include <cmath>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <stdexcept>
#include <unordered_map>

namespace rslab::arith {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

std::shared_mutex g_fact_mx;
std::unordered_map<int64_t, std::vector<Factor>> g_fact_cache;

std::shared_mutex g_kloo_mx;
struct KlooKey {
    int64_t m, n, c;
    bool operator==(const KlooKey&) const = default;
};
struct KlooHash {
    size_t operator()(const KlooKey& k) const {
        size_t h = std::hash<int64_t>()(k.m);
        h ^= std::hash<int64_t>()(k.n) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        h ^= std::hash<int64_t>()(k.c) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        return h;
    }
};
std::unordered_map<KlooKey, double, KlooHash> g_kloo_cache;
constexpr size_t kKlooCacheMax = 1u << 22;

int64_t mod_pos(int64_t a, int64_t c) {
    int64_t r = a % c;
    return r < 0 ? r + c : r;
}

}  // namespace

int64_t inv_mod(int64_t d, int64_t c) {
    if (c < 1) throw std::invalid_argument("inv_mod: c must be >= 1");
    int64_t r0 = c, r1 = mod_pos(d, c);
    int64_t t0 = 0, t1 = 1;
    while (r1 != 0) {
        int64_t q = r0 / r1;
        int64_t r2 = r0 - q * r1;
        int64_t t2 = t0 - q * t1;
        r0 = r1; r1 = r2;
        t0 = t1; t1 = t2;
    }
    if (r0 != 1) throw std::invalid_argument("inv_mod: not invertible");
    return mod_pos(t0, c);
}

int64_t gcd3(int64_t a, int64_t b, int64_t c) {
    return std::gcd(std::gcd(std::llabs(a), std::llabs(b)), std::llabs(c));
}

std::vector<Factor> factorize(int64_t n) {
    if (n < 1) throw std::invalid_argument("factorize: n must be >= 1");
    {
        std::shared_lock lk(g_fact_mx);
        auto it = g_fact_cache.find(n);
        if (it != g_fact_cache.end()) return it->second;
    }
    std::vector<Factor> f;
    int64_t m = n;
    for (int64_t p = 2; p * p <= m; p += (p == 2 ? 1 : 2)) {
        if (m % p == 0) {
            int e = 0;
            while (m % p == 0) { m /= p; ++e; }
            f.push_back({p, e});
        }
    }
    if (m > 1) f.push_back({m, 1});
    {
        std::unique_lock lk(g_fact_mx);
        if (g_fact_cache.size() < (1u << 20)) g_fact_cache.emplace(n, f);
    }
    return f;
}

int64_t divisor_count(int64_t n) {
    int64_t t = 1;
    for (const auto& [p, e] : factorize(n)) t *= (e + 1);
    return t;
}

int64_t euler_phi(int64_t n) {
    int64_t t = n;
    for (const auto& [p, e] : factorize(n)) t -= t / p;
    return t;
}

int mobius(int64_t n) {
    int sign = 1;
    for (const auto& [p, e] : factorize(n)) {
        if (e > 1) return 0;
        sign = -sign;
    }
    return sign;
}

double kloosterman(int64_t m, int64_t n, int64_t c) {
    if (c < 1) throw std::invalid_argument("kloosterman: c must be >= 1");
    if (c == 1) return 1.0;  // single empty-congruence term e(0)
    KlooKey key{mod_pos(m, c), mod_pos(n, c), c};
    {
        std::shared_lock lk(g_kloo_mx);
        auto it = g_kloo_cache.find(key);
        if (it != g_kloo_cache.end()) return it->second;
    }
    // d <-> c-d sends the argument to its negative, so the sines cancel
    // in pairs and only the cos part survives.
    double s = 0.0;
    const int64_t mm = key.m, nn = key.n;
    for (int64_t d = 1; d < c; ++d) {
        if (std::gcd(d, c) != 1) continue;
        int64_t dbar = inv_mod(d, c);
        int64_t arg = mod_pos(mm * d + nn * dbar, c);  // |mm*d| < c^2 <= 2^62 for c <= 2^31
        s += std::cos(kTwoPi * static_cast<double>(arg) / static_cast<double>(c));
    }
    {
        std::unique_lock lk(g_kloo_mx);
        if (g_kloo_cache.size() < kKlooCacheMax) g_kloo_cache.emplace(key, s);
    }
    return s;
}

int64_t ramanujan_sum(int64_t q, int64_t c) {
    if (c < 1 || q < 0) throw std::invalid_argument("ramanujan_sum: need c >= 1, q >= 0");
    if (q == 0) return euler_phi(c);
    int64_t g = std::gcd(q, c);
    int64_t s = 0;
    // iterate divisors d of g
    for (int64_t d = 1; d * d <= g; ++d) {
        if (g % d != 0) continue;
        s += mobius(c / d) * d;
        int64_t d2 = g / d;
        if (d2 != d) s += mobius(c / d2) * d2;
    }
    return s;
}

double ramanujan_sum_direct(int64_t q, int64_t c) {
    double s = 0.0;
    for (int64_t a = 1; a <= c; ++a) {
        if (std::gcd(a, c) != 1) continue;
        s += std::cos(kTwoPi * static_cast<double>(mod_pos(a * q, c)) / static_cast<double>(c));
    }
    return s;
}

double weil_bound_margin(int64_t m, int64_t n, int64_t c) {
    double bound = static_cast<double>(divisor_count(c)) * std::sqrt(static_cast<double>(c)) *
                   std::sqrt(static_cast<double>(gcd3(m, n, c)));
    return bound - std::fabs(kloosterman(m, n, c));
}

void clear_caches() {
    {
        std::unique_lock lk(g_fact_mx);
        g_fact_cache.clear();
    }
    {
        std::unique_lock lk(g_kloo_mx);
        g_kloo_cache.clear();
    }
}

}  // namespace rslab::arith
