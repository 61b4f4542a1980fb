#include <chrono>
#include <cstdio>
#include <functional>

#include "slrc/expr.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using Clock = std::chrono::steady_clock;

double run_ms(const std::function<void()>& fn) {
    auto t0 = Clock::now();
    fn();
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

} // namespace

int main() {
    using namespace slrc;
    const char* exprs[] = {
        "P(3) x P(3) x P(3)",
        "R(5,5,2) x R(5,5,2) x R(5,4,2)",
        "P(5) x R(5,5,3)",
        "R(5,5,3) x R(5,5,3)",
    };
#ifdef _OPENMP
    std::printf("threads: %d\n", omp_get_max_threads());
#else
    std::printf("threads: 1 (built without OpenMP)\n");
#endif
    std::printf("%-36s %10s %12s %12s %8s\n", "code", "messages", "serial ms", "parallel ms",
                "speedup");
    for (const char* e : exprs) {
        BuiltCode b = parse_code_expr(e);
        const Matrix& g = b.code.generator();
        std::uint64_t q = g.field()->order(), total = 0, pw = 1;
        for (std::size_t j = 0; j < g.rows(); ++j) {
            total += pw;
            pw *= q;
        }
        DistanceResult ds, dp;
        double ms_s = run_ms([&] { ds = min_weight_serial(g, enumeration_budget()); });
        double ms_p = run_ms([&] { dp = min_weight_parallel(g, enumeration_budget()); });
        if (ds.d != dp.d || ds.exact != dp.exact) {
            std::printf("DISAGREEMENT on %s: serial %zu parallel %zu\n", e, ds.d, dp.d);
            return 1;
        }
        std::printf("%-36s %10llu %12.2f %12.2f %7.2fx   d=%zu\n", e,
                    static_cast<unsigned long long>(total), ms_s, ms_p,
                    ms_p > 0 ? ms_s / ms_p : 0.0, ds.d);
    }
    return 0;
}
