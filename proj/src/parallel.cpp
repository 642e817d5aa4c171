#include "affgroup/parallel.hpp"

#include <cstdlib>
#include <string>

namespace affgroup {

namespace {
int g_override = 0;

int env_threads()
{
    const char* s = std::getenv("AFFGROUP_THREADS");
    if (!s)
        return 0;
    try {
        int n = std::stoi(s);
        return n > 0 ? n : 0;
    } catch (...) {
        return 0;
    }
}
} // namespace

int worker_count()
{
#if defined(_OPENMP)
    int n = omp_get_max_threads();
    if (g_override > 0)
        n = g_override;
    else if (int e = env_threads(); e > 0 && e < n)
        n = e;
    return n > 0 ? n : 1;
#else
    return 1;
#endif
}

void set_worker_count(int n)
{
    g_override = n > 0 ? n : 0;
}

double pairwise_sum(std::span<const double> xs)
{
    const std::size_t n = xs.size();
    if (n <= 32) {
        double acc = 0.0;
        for (double x : xs)
            acc += x;
        return acc;
    }
    const std::size_t half = n / 2;
    return pairwise_sum(xs.first(half)) + pairwise_sum(xs.subspan(half));
}

} // namespace affgroup
