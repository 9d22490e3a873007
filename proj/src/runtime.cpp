#include "lt/runtime.hpp"

#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace lt {

std::size_t thread_cap() {
    const char* env = std::getenv("LT_THREADS");
    if (env == nullptr || *env == '\0') return 0;
    try {
        const long v = std::stol(env);
        return v > 0 ? static_cast<std::size_t>(v) : 1;
    } catch (...) {
        return 0;  // unparsable values leave the runtime default in place
    }
}

void apply_thread_cap() {
#ifdef _OPENMP
    const std::size_t cap = thread_cap();
    if (cap > 0) {
        const int hw = omp_get_max_threads();
        omp_set_num_threads(static_cast<int>(cap) < hw ? static_cast<int>(cap) : hw);
    }
#endif
}

}  // namespace lt
