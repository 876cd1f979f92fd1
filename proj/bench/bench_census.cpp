// Times the serial tree walk against the frontier-parallel one and prints a
// speedup table. Usage: bench_census [genus_max]  (default 18)

#include <cstdio>
#include <cstdlib>

#include <omp.h>

#include "semipath/enumeration.hpp"

int main(int argc, char** argv) {
    int genus_max = 18;
    if (argc > 1) genus_max = std::atoi(argv[1]);
    if (genus_max < 1 || genus_max > semipath::kMaxGenus) {
        std::fprintf(stderr, "genus_max must lie in [1, %d]\n", semipath::kMaxGenus);
        return 2;
    }
    const int genus_min = genus_max > 4 ? genus_max - 4 : 1;

    std::printf("threads: %d\n", omp_get_max_threads());
    std::printf("%5s %12s %11s %12s %12s %8s\n", "genus", "total", "symmetric",
                "serial_ms", "parallel_ms", "speedup");
    for (int g = genus_min; g <= genus_max; ++g) {
        const double t0 = omp_get_wtime();
        const auto serial = semipath::census_serial(g);
        const double t1 = omp_get_wtime();
        const auto parallel = semipath::census(g);
        const double t2 = omp_get_wtime();
        if (serial.total_count != parallel.total_count
            || serial.symmetric_count != parallel.symmetric_count) {
            std::fprintf(stderr, "kernel mismatch at genus %d\n", g);
            return 1;
        }
        const double serial_ms = (t1 - t0) * 1e3;
        const double parallel_ms = (t2 - t1) * 1e3;
        std::printf("%5d %12llu %11llu %12.2f %12.2f %8.2f\n", g,
                    static_cast<unsigned long long>(serial.total_count),
                    static_cast<unsigned long long>(serial.symmetric_count), serial_ms,
                    parallel_ms, parallel_ms > 0 ? serial_ms / parallel_ms : 0.0);
    }
    return 0;
}
