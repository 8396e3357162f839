// Benchmark comparing the serial reference implementations against the
// OpenMP-parallel kernels: graph construction and the all-sources spanning
// ratio sweep. Results are checked for equality while timing.

#include <chrono>
#include <cstdio>
#include <random>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "theta5/analysis.hpp"
#include "theta5/graph.hpp"

using namespace theta5;
using Clock = std::chrono::steady_clock;

namespace {

std::vector<Point> random_points(int n, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coord(0.0, 1.0);
    std::vector<Point> pts(n);
    for (auto& p : pts) p = {coord(rng), coord(rng)};
    return pts;
}

template <typename F>
double best_of(int reps, F&& f) {
    double best = 1e300;
    for (int i = 0; i < reps; ++i) {
        auto t0 = Clock::now();
        f();
        auto t1 = Clock::now();
        best = std::min(best, std::chrono::duration<double>(t1 - t0).count());
    }
    return best;
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads = %d\n\n", omp_get_max_threads());
#else
    std::printf("OpenMP not enabled; parallel kernels run serially\n\n");
#endif

    std::printf("%-28s %8s %12s %12s %9s\n", "kernel", "n", "serial [s]", "parallel [s]",
                "speedup");

    for (int n : {500, 1000, 2000}) {
        auto pts = random_points(n, 42 + n);
        GeomConfig cfg = config_for_points(5, pts);
        ThetaGraph ref;
        double ts = best_of(3, [&] { ref = build_theta_graph_serial(cfg, pts); });
        ThetaGraph par;
        double tp = best_of(3, [&] { par = build_theta_graph(cfg, pts); });
        if (par.edges != ref.edges || par.cone_choices != ref.cone_choices) {
            std::printf("MISMATCH between serial and parallel build at n=%d\n", n);
            return 1;
        }
        std::printf("%-28s %8d %12.4f %12.4f %8.2fx\n", "build_theta_graph", n, ts, tp, ts / tp);
    }

    for (int n : {200, 400, 800}) {
        auto pts = random_points(n, 17 + n);
        ThetaGraph g = build_theta_graph(config_for_points(5, pts), pts);
        RatioReport ref;
        double ts = best_of(3, [&] { ref = spanning_ratio_serial(g); });
        RatioReport par;
        double tp = best_of(3, [&] { par = spanning_ratio(g); });
        if (par.ratio != ref.ratio || par.worst_pair != ref.worst_pair) {
            std::printf("MISMATCH between serial and parallel ratio at n=%d\n", n);
            return 1;
        }
        std::printf("%-28s %8d %12.4f %12.4f %8.2fx\n", "spanning_ratio", n, ts, tp, ts / tp);
    }

    return 0;
}
