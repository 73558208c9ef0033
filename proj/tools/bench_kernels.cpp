// Times each OpenMP kernel against its serial reference and reports the
// speedup. Run with OMP_NUM_THREADS to control the worker count.

#include <chrono>
#include <cstdio>
#include <functional>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "collatz/audit.hpp"
#include "collatz/oracle.hpp"

namespace {

double time_ms(const std::function<void()>& fn) {
    const auto t0 = std::chrono::steady_clock::now();
    fn();
    const auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

void report(const char* name, double serial_ms, double parallel_ms) {
    std::printf("%-28s serial %9.1f ms   openmp %9.1f ms   speedup %.2fx\n",
                name, serial_ms, parallel_ms, serial_ms / parallel_ms);
}

} // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP workers: %d\n", omp_get_max_threads());
#else
    std::printf("built without OpenMP\n");
#endif

    {
        const double s = time_ms([] {
            collatz::scan_reaches_one_serial(300000, 10000);
        });
        const double p = time_ms([] {
            collatz::scan_reaches_one(300000, 10000);
        });
        report("scan_reaches_one", s, p);
    }
    {
        const collatz::Path path = collatz::Path::parse("4:2:3,4");
        const double s = time_ms([&] {
            collatz::followers_in_range_serial(path, 1, 2000000, true);
        });
        const double p = time_ms([&] {
            collatz::followers_in_range(path, 1, 2000000, true);
        });
        report("followers_in_range", s, p);
    }
    {
        const double s = time_ms([] {
            collatz::descent_inequality_violations_serial(1, 40000);
        });
        const double p = time_ms([] {
            collatz::descent_inequality_violations(1, 40000);
        });
        report("descent_inequality", s, p);
    }
    return 0;
}
