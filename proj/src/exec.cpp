#include "ksadist/exec.hpp"

#include <atomic>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ksadist {

namespace {
std::atomic<int> g_max_threads{0};
} // namespace

void set_max_threads(int n) {
    g_max_threads.store(n < 0 ? 0 : n);
#ifdef _OPENMP
    if (n > 0)
        omp_set_num_threads(n);
#endif
}

int max_threads() {
    int n = g_max_threads.load();
    if (n > 0)
        return n;
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

} // namespace ksadist
