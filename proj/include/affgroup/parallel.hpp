#pragma once

#include <cstdint>
#include <span>
#include <vector>

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace affgroup {

/// Number of workers used by the parallel kernels. Honors the
/// AFFGROUP_THREADS environment variable (capped at the OpenMP maximum);
/// returns 1 when built without OpenMP.
int worker_count();

/// Override the worker count for this process (0 restores the default).
void set_worker_count(int n);

template <class Body>
void parallel_for(std::int64_t n, Body&& body)
{
#if defined(_OPENMP)
#pragma omp parallel for schedule(static) num_threads(worker_count())
    for (std::int64_t i = 0; i < n; ++i)
        body(i);
#else
    for (std::int64_t i = 0; i < n; ++i)
        body(i);
#endif
}

/// Pairwise summation over a buffer. The reduction tree depends only on the
/// element count, so results are independent of the worker count.
double pairwise_sum(std::span<const double> xs);

/// Evaluate `eval(i)` for i in [0,n) into a buffer in parallel, then reduce
/// with pairwise summation. Deterministic for pure `eval`.
template <class Eval>
double parallel_sum(std::int64_t n, Eval&& eval)
{
    std::vector<double> buf(static_cast<std::size_t>(n));
    parallel_for(n, [&](std::int64_t i) { buf[static_cast<std::size_t>(i)] = eval(i); });
    return pairwise_sum(buf);
}

template <class Eval>
double serial_sum(std::int64_t n, Eval&& eval)
{
    double acc = 0.0;
    for (std::int64_t i = 0; i < n; ++i)
        acc += eval(i);
    return acc;
}

} // namespace affgroup
