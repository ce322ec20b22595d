#include "qsim/trajectories.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace qsim {

namespace {

constexpr int kBracketIntervals = 1024;
constexpr double kJumpTimeTolerance = 1e-10;

// splitmix64: counter-based scrambler, one independent stream per seed.
struct SplitMix64 {
    std::uint64_t state;
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
};

// Uniform on the open interval (0,1): never returns an exact endpoint.
double uniform_open(SplitMix64& rng) {
    return (static_cast<double>(rng.next() >> 11) + 0.5) * 0x1.0p-53;
}

// Per-trajectory summary used by the ensemble accumulators. A trajectory
// that never jumps carries t_jump = +infinity.
struct TrajectorySummary {
    double t_jump;
    std::int8_t channel;
};

std::vector<TrajectorySummary> summarize(const TrajectorySampler& sampler,
                                         std::int64_t n_traj,
                                         std::uint64_t base_seed,
                                         bool parallel) {
    std::vector<TrajectorySummary> out(static_cast<std::size_t>(n_traj));
    const auto run = [&](std::int64_t i) {
        const auto rec =
            sampler.sample(base_seed ^ static_cast<std::uint64_t>(i));
        auto& s = out[static_cast<std::size_t>(i)];
        if (rec.jumped) {
            s.t_jump = *rec.t_jump;
            s.channel = static_cast<std::int8_t>(*rec.channel);
        } else {
            s.t_jump = std::numeric_limits<double>::infinity();
            s.channel = -1;
        }
    };
    if (parallel) {
#pragma omp parallel for schedule(static)
        for (std::int64_t i = 0; i < n_traj; ++i) {
            run(i);
        }
    } else {
        for (std::int64_t i = 0; i < n_traj; ++i) {
            run(i);
        }
    }
    return out;
}

void check_grid(std::span<const double> t_grid, std::int64_t n_traj) {
    if (n_traj < 1) {
        throw std::invalid_argument("ensemble_average: n_traj must be >= 1");
    }
    if (t_grid.empty()) {
        throw std::invalid_argument("ensemble_average: time grid is empty");
    }
    if (t_grid.front() < 0.0) {
        throw std::invalid_argument(
            "ensemble_average: grid times must be nonnegative");
    }
    for (std::size_t k = 1; k < t_grid.size(); ++k) {
        if (!(t_grid[k] > t_grid[k - 1])) {
            throw std::invalid_argument(
                "ensemble_average: grid times must be strictly increasing");
        }
    }
}

EnsembleEstimate accumulate(const SystemParams& params,
                            std::span<const double> t_grid,
                            std::int64_t n_traj, std::uint64_t base_seed,
                            bool parallel) {
    check_grid(t_grid, n_traj);
    const TrajectorySampler sampler(params, t_grid.back());
    const auto summaries = summarize(sampler, n_traj, base_seed, parallel);

    EnsembleEstimate est;
    est.t_grid.assign(t_grid.begin(), t_grid.end());
    est.n_traj = n_traj;
    est.rho_hat.assign(t_grid.size(), Matrix5::Zero());
    est.unjumped.assign(t_grid.size(), 0);

    for (const auto& s : summaries) {
        if (s.channel >= 0) {
            ++est.channel_counts[static_cast<std::size_t>(s.channel)];
        } else {
            ++est.no_jump_count;
        }
    }

    // Conditioned states are trajectory-independent, so the per-point
    // projectors are computed once; the estimator itself still averages one
    // contribution per trajectory (in index order, for bit determinism).
    const Matrix5 ground = [] {
        Matrix5 m = Matrix5::Zero();
        m(basis::ground, basis::ground) = 1.0;
        return m;
    }();
    std::vector<Matrix5> conditioned(t_grid.size());
    for (std::size_t k = 0; k < t_grid.size(); ++k) {
        const AmplitudeState psi = sampler.no_jump_state(t_grid[k]);
        Vector5 v;
        v << psi.alpha, psi.beta, psi.gamma, psi.delta, cplx{0.0, 0.0};
        conditioned[k] = (v * v.adjoint()) / p_no(psi);
    }

    const auto accumulate_point = [&](std::size_t k) {
        const double t = t_grid[k];
        Matrix5 acc = Matrix5::Zero();
        std::int64_t alive = 0;
        for (const auto& s : summaries) {
            if (t < s.t_jump) {
                acc += conditioned[k];
                ++alive;
            } else {
                acc += ground;
            }
        }
        est.rho_hat[k] = acc / static_cast<double>(n_traj);
        est.unjumped[k] = alive;
    };

    const auto n_points = static_cast<std::int64_t>(t_grid.size());
    if (parallel) {
#pragma omp parallel for schedule(dynamic)
        for (std::int64_t k = 0; k < n_points; ++k) {
            accumulate_point(static_cast<std::size_t>(k));
        }
    } else {
        for (std::int64_t k = 0; k < n_points; ++k) {
            accumulate_point(static_cast<std::size_t>(k));
        }
    }
    return est;
}

}  // namespace

TrajectorySampler::TrajectorySampler(const SystemParams& params, double t_max)
    : params_(params), consts_(omega_constants(params)), t_max_(t_max) {
    if (!(t_max > 0.0) || !std::isfinite(t_max)) {
        throw std::invalid_argument("TrajectorySampler: t_max must be positive");
    }
    params_.validate();
    bracket_times_.resize(kBracketIntervals + 1);
    bracket_p_no_.resize(kBracketIntervals + 1);
    for (int j = 0; j <= kBracketIntervals; ++j) {
        const double t = t_max_ * static_cast<double>(j) / kBracketIntervals;
        bracket_times_[static_cast<std::size_t>(j)] = t;
        bracket_p_no_[static_cast<std::size_t>(j)] = p_no(no_jump_state(t));
    }
}

AmplitudeState TrajectorySampler::no_jump_state(double t) const {
    return amplitudes(params_, consts_, t);
}

double TrajectorySampler::find_jump_time(double r) const {
    // p_no is nonincreasing, so the first bracket value <= r encloses the
    // unique crossing together with its predecessor.
    const auto it =
        std::lower_bound(bracket_p_no_.begin() + 1, bracket_p_no_.end(), r,
                         [](double p, double level) { return p > level; });
    const auto hi = static_cast<std::size_t>(
        std::min(it - bracket_p_no_.begin(),
                 static_cast<std::ptrdiff_t>(bracket_p_no_.size() - 1)));
    double left = bracket_times_[hi - 1];
    double right = bracket_times_[hi];
    while (right - left > kJumpTimeTolerance) {
        const double mid = 0.5 * (left + right);
        if (p_no(no_jump_state(mid)) > r) {
            left = mid;
        } else {
            right = mid;
        }
    }
    return 0.5 * (left + right);
}

JumpChannel TrajectorySampler::draw_channel(const AmplitudeState& at_jump,
                                            double u) const {
    // Channel weights <psi|J_i^+ J_i|psi> at the jump instant. The collective
    // channel carries the interference between the two cavity fields.
    const cplx collective_amp =
        std::sqrt(params_.kappa_a) * at_jump.beta +
        std::sqrt(params_.kappa_b) * std::exp(cplx{0.0, -params_.phi}) *
            at_jump.delta;
    std::array<double, kNumJumpChannels> weights{
        std::norm(collective_amp),
        params_.kappa_prime_a * std::norm(at_jump.beta),
        params_.kappa_prime_b * std::norm(at_jump.delta),
        params_.gamma_a * std::norm(at_jump.alpha),
        params_.gamma_b * std::norm(at_jump.gamma),
    };
    double total = 0.0;
    for (double w : weights) {
        total += w;
    }
    if (!(total > 0.0)) {
        throw std::runtime_error(
            "sample_trajectory: all channel weights vanish at the jump time");
    }
    double threshold = u * total;
    for (int i = 0; i + 1 < kNumJumpChannels; ++i) {
        threshold -= weights[static_cast<std::size_t>(i)];
        if (threshold < 0.0) {
            return static_cast<JumpChannel>(i);
        }
    }
    return static_cast<JumpChannel>(kNumJumpChannels - 1);
}

TrajectoryRecord TrajectorySampler::sample(std::uint64_t seed) const {
    SplitMix64 rng{seed};
    const double r = uniform_open(rng);
    const double channel_draw = uniform_open(rng);

    TrajectoryRecord rec;
    rec.seed = seed;
    if (bracket_p_no_.back() > r) {
        return rec;  // norm never decays to r within t_max
    }
    const double t_jump = find_jump_time(r);
    rec.jumped = true;
    rec.t_jump = t_jump;
    rec.channel = draw_channel(no_jump_state(t_jump), channel_draw);
    return rec;
}

TrajectoryRecord sample_trajectory(const SystemParams& params, double t_max,
                                   std::uint64_t seed) {
    return TrajectorySampler(params, t_max).sample(seed);
}

EnsembleEstimate ensemble_average(const SystemParams& params,
                                  std::span<const double> t_grid,
                                  std::int64_t n_traj,
                                  std::uint64_t base_seed) {
    return accumulate(params, t_grid, n_traj, base_seed, /*parallel=*/true);
}

EnsembleEstimate ensemble_average_serial(const SystemParams& params,
                                         std::span<const double> t_grid,
                                         std::int64_t n_traj,
                                         std::uint64_t base_seed) {
    return accumulate(params, t_grid, n_traj, base_seed, /*parallel=*/false);
}

}  // namespace qsim
