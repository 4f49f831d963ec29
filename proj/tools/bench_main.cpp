// Compares the OpenMP sweep kernels against their serial reference loops.
// Usage: qutrit_bench [grid_side] [samples]

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "qutrit/families.hpp"
#include "qutrit/state_sweep.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

template <class F>
double timed(F&& f) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    return seconds_since(t0);
}

}  // namespace

int main(int argc, char** argv) {
    const int side = argc > 1 ? std::atoi(argv[1]) : 120;
    const int samples = argc > 2 ? std::atoi(argv[2]) : 5000;

#ifdef _OPENMP
    std::printf("openmp threads: %d\n", omp_get_max_threads());
#else
    std::printf("openmp: disabled at build time\n");
#endif

    const auto p_axis = qutrit::grid_points({0.01, 0.49, side});
    const auto b_axis = qutrit::grid_points({-0.35, 0.0, side});

    double checksum_serial = 0.0, checksum_parallel = 0.0;
    const double t_serial = timed([&] {
        const auto table = qutrit::sweep_serial(qutrit::Family::Eq22, {p_axis, b_axis});
        for (const auto& row : table.rows)
            if (!row.skipped) checksum_serial += row.negativity_sum;
    });
    const double t_parallel = timed([&] {
        const auto table = qutrit::sweep(qutrit::Family::Eq22, {p_axis, b_axis});
        for (const auto& row : table.rows)
            if (!row.skipped) checksum_parallel += row.negativity_sum;
    });
    std::printf("grid sweep %dx%d: serial %.3fs, parallel %.3fs, speedup %.2fx, "
                "checksum diff %.1e\n",
                side, side, t_serial, t_parallel, t_serial / t_parallel,
                std::fabs(checksum_serial - checksum_parallel));

    double min_serial = 0.0, min_parallel = 0.0;
    const double t_rs = timed([&] { min_serial = qutrit::min_iq_padded_qutrit_serial(samples, 42); });
    const double t_rp = timed([&] { min_parallel = qutrit::min_iq_padded_qutrit(samples, 42); });
    std::printf("random qutrit sweep %d samples: serial %.3fs, parallel %.3fs, "
                "speedup %.2fx, min iq diff %.1e\n",
                samples, t_rs, t_rp, t_rs / t_rp, std::fabs(min_serial - min_parallel));
    return 0;
}
