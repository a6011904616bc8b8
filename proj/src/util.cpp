#include "okflow/util.hpp"

#include <cstdlib>

#include <omp.h>

namespace okflow {

int worker_threads() {
    static int n = [] {
        if (const char* s = std::getenv("OKFLOW_THREADS")) {
            int v = std::atoi(s);
            if (v > 0) return v;
        }
        return omp_get_max_threads();
    }();
    return n;
}

} // namespace okflow
