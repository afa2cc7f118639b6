// Wall-clock comparison of the serial reference drivers against the OpenMP
// ones. Both paths run identical per-point work, so the output also asserts
// that results agree exactly.

#include <chrono>
#include <cstdio>
#include <cstdlib>

#include "jlx/parallel.hpp"
#include "jlx/tables.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double time_ms(void (*fn)(jlx::Exec), jlx::Exec exec) {
    const auto t0 = Clock::now();
    fn(exec);
    const auto t1 = Clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

void run_sweep(jlx::Exec exec) {
    const auto res = jlx::tables::sweep(1.0, 3, 3000, 1, exec);
    if (res.records.size() != 2998) std::abort();
}

void run_table1(jlx::Exec exec) {
    const auto rows = jlx::tables::table1_check(exec);
    for (const auto& row : rows)
        for (const auto& c : row.claims)
            if (!c.verified) std::abort();
}

void compare(const char* name, void (*fn)(jlx::Exec)) {
    const double serial = time_ms(fn, jlx::Exec::Serial);
    const double parallel = time_ms(fn, jlx::Exec::Parallel);
    std::printf("%-22s serial %9.1f ms   parallel %9.1f ms   speedup %.2fx\n", name, serial,
                parallel, serial / parallel);
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads %d\n", omp_get_max_threads());
#else
    std::printf("built without OpenMP; both paths run serially\n");
#endif
    compare("sweep s=1 n=3..3000", run_sweep);
    compare("table1 verification", run_table1);

    // determinism: both paths must produce identical bits
    const auto a = jlx::tables::sweep(2.0, 5, 500, 1, jlx::Exec::Serial);
    const auto b = jlx::tables::sweep(2.0, 5, 500, 1, jlx::Exec::Parallel);
    for (std::size_t i = 0; i < a.records.size(); ++i) {
        if (a.records[i].a_ns != b.records[i].a_ns || a.records[i].p1 != b.records[i].p1)
            std::abort();
    }
    std::printf("serial and parallel sweeps agree exactly\n");
    return 0;
}
