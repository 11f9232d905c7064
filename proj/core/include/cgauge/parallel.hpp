#pragma once

#include <cstddef>
#include <functional>
#include <span>

namespace cgauge {

/// Worker count: hardware concurrency, capped by CURVATURE_GAUGE_THREADS.
int worker_count();

/// Calls body(i) for i in [0, count), distributing indices over
/// worker_count() threads. Each index is visited exactly once; the body must
/// only write to slots owned by its index.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

/// Pairwise (cascade) summation in index order. The result depends only on
/// the input sequence, never on how it was produced.
double pairwise_sum(std::span<const double> values);

}  // namespace cgauge
