// Benchmark: serial reference vs OpenMP kernel of the exhaustive orientation
// count, verifying that both return identical verdicts.
#include <chrono>
#include <cstdio>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "wr/corpus.hpp"
#include "wr/oracle.hpp"

namespace {

double run_ms(wr::oracle_verdict (*fn)(const wr::graph&, wr::oracle_limits), const wr::graph& g,
              wr::oracle_verdict& out) {
    auto t0 = std::chrono::steady_clock::now();
    out = fn(g, {});
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
    std::printf("built without OpenMP; the parallel kernel runs serially\n");
#endif
    std::printf("%-18s %10s %12s %12s %9s %8s\n", "graph", "edges", "serial ms", "parallel ms", "speedup",
                "count");
    const char* names[] = {"w5", "g7-20", "g12prime", "g17prime", "sub-S", "sub-C"};
    for (const char* name : names) {
        const auto& g = wr::corpus_get(name).g;
        wr::oracle_verdict vs, vp;
        double serial_ms = run_ms(&wr::brute_force_count_serial, g, vs);
        double parallel_ms = run_ms(&wr::brute_force_count, g, vp);
        if (vs.semi_transitive_count != vp.semi_transitive_count || vs.enumerated != vp.enumerated ||
            vs.example.has_value() != vp.example.has_value() ||
            (vs.example && !(*vs.example == *vp.example))) {
            std::printf("MISMATCH on %s: serial and parallel kernels disagree\n", name);
            return 1;
        }
        std::printf("%-18s %10d %12.2f %12.2f %8.2fx %8llu\n", name, g.edge_count(), serial_ms, parallel_ms,
                    serial_ms / (parallel_ms > 0 ? parallel_ms : 1e-9),
                    static_cast<unsigned long long>(vs.semi_transitive_count));
    }
    return 0;
}
