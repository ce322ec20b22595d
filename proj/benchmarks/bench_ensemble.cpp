// Benchmark of the trajectory-ensemble kernel: plain serial reference versus
// the OpenMP implementation, with a bitwise-equality check between the two.

#include <chrono>
#include <cstdio>
#include <cstring>

#include <omp.h>

#include "qsim/presets.hpp"
#include "qsim/series.hpp"
#include "qsim/trajectories.hpp"

namespace {

using clock_type = std::chrono::steady_clock;

double seconds_since(clock_type::time_point start) {
    return std::chrono::duration<double>(clock_type::now() - start).count();
}

bool bitwise_equal(const qsim::EnsembleEstimate& a,
                   const qsim::EnsembleEstimate& b) {
    if (a.rho_hat.size() != b.rho_hat.size() || a.unjumped != b.unjumped ||
        a.channel_counts != b.channel_counts ||
        a.no_jump_count != b.no_jump_count) {
        return false;
    }
    for (std::size_t k = 0; k < a.rho_hat.size(); ++k) {
        if (std::memcmp(a.rho_hat[k].data(), b.rho_hat[k].data(),
                        sizeof(qsim::cplx) * 25) != 0) {
            return false;
        }
    }
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    std::int64_t n_traj = 200000;
    if (argc > 1) {
        n_traj = std::atoll(argv[1]);
    }
    const auto params = qsim::preset_base_params();
    const auto grid = qsim::uniform_grid(10.0, 0.1);
    const std::uint64_t seed = 2024;

    std::printf("trajectory ensemble, n_traj=%lld, %zu grid points, %d threads\n",
                static_cast<long long>(n_traj), grid.size(),
                omp_get_max_threads());

    auto start = clock_type::now();
    const auto serial =
        qsim::ensemble_average_serial(params, grid, n_traj, seed);
    const double t_serial = seconds_since(start);
    std::printf("  serial reference : %8.3f s\n", t_serial);

    start = clock_type::now();
    const auto parallel = qsim::ensemble_average(params, grid, n_traj, seed);
    const double t_parallel = seconds_since(start);
    std::printf("  OpenMP           : %8.3f s  (speedup %.2fx)\n", t_parallel,
                t_serial / t_parallel);

    if (!bitwise_equal(serial, parallel)) {
        std::printf("MISMATCH: serial and OpenMP results differ\n");
        return 1;
    }
    std::printf("  results bit-identical\n");
    return 0;
}
