#include "aim1d/exec.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace aim1d::exec {

namespace {
int g_max_threads = 0;
}

int max_threads() { return g_max_threads; }

void set_max_threads(int n) {
    g_max_threads = n;
#ifdef _OPENMP
    if (n > 0)
        omp_set_num_threads(n);
#endif
}

int hardware_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

} // namespace aim1d::exec
