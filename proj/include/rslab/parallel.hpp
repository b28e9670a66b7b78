#pragma once
// Minimal parallel-for with deterministic (fixed-order) reduction.

#include <cstddef>
#include <functional>
#include <vector>

namespace rslab {

// global worker cap used by the CLI --jobs flag; 0 = hardware concurrency
void set_max_jobs(int jobs);
int max_jobs();

// run f(i) for i in [0, n) on up to max_jobs() threads (block partition)
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& f);

// chunked sum with a fixed-order final reduction: identical result for any
// worker count
double parallel_sum(std::size_t n, const std::function<double(std::size_t)>& term);

}  // namespace rslab
