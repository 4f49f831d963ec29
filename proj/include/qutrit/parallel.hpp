#pragma once

#include <cstddef>

// Tiny OpenMP shims. Every parallel kernel in the library has a _serial twin
// built on serial_for; both run the same per-index body, so outputs match
// exactly and the serial version stays usable as a reference in tests.

namespace qutrit {

template <class F>
void serial_for(std::size_t n, F&& body) {
    for (std::size_t i = 0; i < n; ++i) body(i);
}

template <class F>
void parallel_for(std::size_t n, F&& body) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 16)
    for (long long i = 0; i < static_cast<long long>(n); ++i)
        body(static_cast<std::size_t>(i));
#else
    serial_for(n, body);
#endif
}

}  // namespace qutrit
