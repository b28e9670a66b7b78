#include "rslab/parallel.hpp"

#include <atomic>
#include <thread>

namespace rslab {

namespace {
std::atomic<int> g_jobs{0};
}

void set_max_jobs(int jobs) { g_jobs.store(jobs < 0 ? 0 : jobs); }

int max_jobs() {
    int j = g_jobs.load();
    if (j > 0) return j;
    unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : static_cast<int>(hc);
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& f) {
    int nw = max_jobs();
    if (nw <= 1 || n < 2) {
        for (std::size_t i = 0; i < n; ++i) f(i);
        return;
    }
    if (static_cast<std::size_t>(nw) > n) nw = static_cast<int>(n);
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= n) return;
            f(i);
        }
    };
    std::vector<std::thread> ts;
    ts.reserve(nw - 1);
    for (int t = 1; t < nw; ++t) ts.emplace_back(worker);
    worker();
    for (auto& t : ts) t.join();
}

double parallel_sum(std::size_t n, const std::function<double(std::size_t)>& term) {
    // fixed chunking independent of worker count, then in-order reduction
    const std::size_t chunk = 1024;
    std::size_t nchunks = (n + chunk - 1) / chunk;
    std::vector<double> partial(nchunks, 0.0);
    parallel_for(nchunks, [&](std::size_t c) {
        double s = 0.0;
        std::size_t lo = c * chunk, hi = std::min(n, lo + chunk);
        for (std::size_t i = lo; i < hi; ++i) s += term(i);
        partial[c] = s;
    });
    double s = 0.0;
    for (double p : partial) s += p;
    return s;
}

}  // namespace rslab
