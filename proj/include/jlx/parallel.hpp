#pragma once

#include <cstddef>
#include <exception>
#include <utility>

#ifdef _OPENMP
#include <omp.h>
#endif

// Batch drivers (sweeps, table verification) are embarrassingly parallel:
// every grid point is an independent pure-function evaluation writing to its
// own slot. Exec::Serial is the reference path kept for testing; the OpenMP
// path must produce bit-identical results since the per-index work is
// identical. Exceptions thrown inside the parallel region are captured and
// rethrown on the calling thread (first one wins).

namespace jlx {

enum class Exec { Serial, Parallel };

template <typename F>
void for_each_index(std::size_t count, Exec exec, F&& body) {
#ifdef _OPENMP
    if (exec == Exec::Parallel) {
        std::exception_ptr first_error = nullptr;
        const long long n = static_cast<long long>(count);
#pragma omp parallel for schedule(dynamic, 4)
        for (long long i = 0; i < n; ++i) {
            try {
                body(static_cast<std::size_t>(i));
            } catch (...) {
#pragma omp critical(jlx_for_each_index_error)
                if (!first_error) first_error = std::current_exception();
            }
        }
        if (first_error) std::rethrow_exception(first_error);
        return;
    }
#else
    (void)exec;
#endif
    for (std::size_t i = 0; i < count; ++i) body(i);
}

}  // namespace jlx
