#pragma once

#include <cstddef>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace obst {

/// Execution mode for the data-parallel kernels (arrangement intersection
/// phase, verifier pair loop, certificate scans). Serial is the reference
/// implementation; Parallel uses OpenMP when compiled in. Both produce
/// bit-identical results: workers only fill preassigned slots.
enum class Exec { Serial, Parallel };

template <class F>
void parallel_for(Exec mode, std::size_t n, F&& body) {
#ifdef _OPENMP
    if (mode == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic, 16)
        for (long long i = 0; i < static_cast<long long>(n); ++i)
            body(static_cast<std::size_t>(i));
        return;
    }
#else
    (void)mode;
#endif
    for (std::size_t i = 0; i < n; ++i) body(i);
}

}  // namespace obst
