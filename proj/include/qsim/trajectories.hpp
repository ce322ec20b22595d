// trajectories.hpp — Monte Carlo quantum-trajectory unraveling by the delay
// function method: the no-jump state evolves deterministically while its
// decaying norm is compared against one uniform draw per trajectory; the
// crossing instant is the jump time, after which the system sits in the
// joint ground state. Ensemble averages reproduce the master equation.
//
// Determinism contract: a run is a pure function of (params, grid, n_traj,
// base_seed). Per-trajectory seeds are base_seed XOR trajectory index, and
// every floating-point accumulator is summed in trajectory-index order, so
// serial and OpenMP runs agree bit for bit at any thread count.

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "qsim/analytic.hpp"
#include "qsim/model.hpp"
#include "qsim/params.hpp"

namespace qsim {

struct TrajectoryRecord {
    std::uint64_t seed{0};
    bool jumped{false};
    std::optional<double> t_jump;
    std::optional<JumpChannel> channel;
};

struct EnsembleEstimate {
    std::vector<double> t_grid;
    std::vector<Matrix5> rho_hat;          // sample mean per grid point
    std::vector<std::int64_t> unjumped;    // trajectories not yet jumped at t
    std::int64_t n_traj{0};
    std::array<std::int64_t, kNumJumpChannels> channel_counts{};
    std::int64_t no_jump_count{0};
};

// Reusable sampler: precomputes the closed-form constants and a bracketing
// grid of p_no over [0, t_max] shared by all trajectories. Immutable after
// construction and safe to share across threads.
class TrajectorySampler {
  public:
    TrajectorySampler(const SystemParams& params, double t_max);

    TrajectoryRecord sample(std::uint64_t seed) const;

    double t_max() const { return t_max_; }
    // Conditioned no-jump state at time t (normalization not applied).
    AmplitudeState no_jump_state(double t) const;

  private:
    double find_jump_time(double r) const;
    JumpChannel draw_channel(const AmplitudeState& at_jump, double u) const;

    SystemParams params_;
    OmegaConstants consts_;
    double t_max_;
    std::vector<double> bracket_times_;
    std::vector<double> bracket_p_no_;  // nonincreasing
};

// One trajectory over [0, t_max]. Convenience wrapper that builds a sampler
// per call; use TrajectorySampler directly for bulk sampling.
TrajectoryRecord sample_trajectory(const SystemParams& params, double t_max,
                                   std::uint64_t seed);

// Sample-mean density matrix over n_traj trajectories at the given strictly
// increasing grid times. OpenMP-parallel; bit-identical to
// ensemble_average_serial for the same arguments.
EnsembleEstimate ensemble_average(const SystemParams& params,
                                  std::span<const double> t_grid,
                                  std::int64_t n_traj, std::uint64_t base_seed);

// Plain reference implementation (no OpenMP), kept for testing and for the
// benchmark baseline. Same summation order as the parallel version.
EnsembleEstimate ensemble_average_serial(const SystemParams& params,
                                         std::span<const double> t_grid,
                                         std::int64_t n_traj,
                                         std::uint64_t base_seed);

}  // namespace qsim
