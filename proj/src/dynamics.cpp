#include "qsim/dynamics.hpp"

#include <cmath>
#include <stdexcept>

#include "qsim/model.hpp"

namespace qsim {

namespace {

constexpr cplx kI{0.0, 1.0};

long long step_count(const IntegratorConfig& cfg) {
    return std::llround(cfg.t_max / cfg.dt);
}

// Rejects steps too coarse for the fastest scale in H_eff. RK4 would still
// be stable well past this point; the guard catches configuration mistakes.
void check_step_size(const IntegratorConfig& cfg, const Matrix5& h_eff) {
    const double fastest = max_abs(h_eff);
    if (cfg.dt * fastest > 0.1) {
        throw std::invalid_argument(
            "integrator dt too large for the fastest rate in H_eff: require "
            "dt * max|H_eff| <= 0.1");
    }
}

}  // namespace

void IntegratorConfig::validate() const {
    if (!(dt > 0.0) || !std::isfinite(dt)) {
        throw std::invalid_argument("IntegratorConfig: dt must be positive");
    }
    if (!(t_max >= 0.0) || !std::isfinite(t_max)) {
        throw std::invalid_argument("IntegratorConfig: t_max must be nonnegative");
    }
    if (t_max > 0.0 && dt > t_max) {
        throw std::invalid_argument("IntegratorConfig: dt must not exceed t_max");
    }
    if (sample_stride < 1) {
        throw std::invalid_argument(
            "IntegratorConfig: sample_stride must be a positive integer");
    }
}

std::vector<AmplitudeState> integrate_schrodinger(const SystemParams& params,
                                                  const IntegratorConfig& cfg) {
    cfg.validate();
    const Matrix5 h_eff = build_effective_hamiltonian(params).entries;
    check_step_size(cfg, h_eff);

    // The ground-state row/column of H_eff is zero, so the dynamics closes on
    // the four excited amplitudes.
    const Eigen::Matrix<cplx, 4, 4> generator =
        -kI * h_eff.topLeftCorner<4, 4>();
    const auto rhs = [&generator](double, const Vector4& y) -> Vector4 {
        return generator * y;
    };

    const long long n_steps = step_count(cfg);
    std::vector<AmplitudeState> samples;
    samples.reserve(static_cast<std::size_t>(n_steps / cfg.sample_stride) + 2);

    Vector4 y;
    y << cplx{1.0, 0.0}, cplx{0.0, 0.0}, cplx{0.0, 0.0}, cplx{0.0, 0.0};

    const auto emit = [&](long long step, const Vector4& v) {
        AmplitudeState s;
        s.t = static_cast<double>(step) * cfg.dt;
        s.alpha = v(0);
        s.beta = v(1);
        s.gamma = v(2);
        s.delta = v(3);
        s.eps_sq = 1.0 - p_no(s);
        samples.push_back(s);
    };

    emit(0, y);
    for (long long step = 0; step < n_steps; ++step) {
        const double t = static_cast<double>(step) * cfg.dt;
        y = rk4_step(rhs, t, y, cfg.dt);
        const long long done = step + 1;
        if (done % cfg.sample_stride == 0 || done == n_steps) {
            emit(done, y);
        }
    }
    return samples;
}

std::vector<DensitySample> integrate_master(const SystemParams& params,
                                            const IntegratorConfig& cfg,
                                            const Matrix5& rho0) {
    cfg.validate();
    const Matrix5 h = build_hamiltonian(params).entries;
    const Matrix5 h_eff = build_effective_hamiltonian(params).entries;
    check_step_size(cfg, h_eff);

    const auto jump_ops = build_jump_operators(params);
    std::array<Matrix5, kNumJumpChannels> jumps;
    std::array<Matrix5, kNumJumpChannels> jumps_dag;
    Matrix5 damping = Matrix5::Zero();  // sum_i J_i^+ J_i
    for (int i = 0; i < kNumJumpChannels; ++i) {
        jumps[i] = jump_ops[static_cast<std::size_t>(i)].entries;
        jumps_dag[i] = jumps[i].adjoint();
        damping += jumps_dag[i] * jumps[i];
    }

    const auto rhs = [&](double, const Matrix5& rho) -> Matrix5 {
        Matrix5 out = -kI * (h * rho - rho * h);
        for (int i = 0; i < kNumJumpChannels; ++i) {
            out += jumps[i] * rho * jumps_dag[i];
        }
        out -= 0.5 * (damping * rho + rho * damping);
        return out;
    };

    const long long n_steps = step_count(cfg);
    std::vector<DensitySample> samples;
    samples.reserve(static_cast<std::size_t>(n_steps / cfg.sample_stride) + 2);

    Matrix5 rho = rho0;
    samples.push_back({0.0, rho});
    for (long long step = 0; step < n_steps; ++step) {
        const double t = static_cast<double>(step) * cfg.dt;
        rho = rk4_step(rhs, t, rho, cfg.dt);
        const long long done = step + 1;
        if (done % cfg.sample_stride == 0 || done == n_steps) {
            samples.push_back({static_cast<double>(done) * cfg.dt, rho});
        }
    }
    return samples;
}

Matrix5 pure_state(int basis_index) {
    Matrix5 rho = Matrix5::Zero();
    rho(basis_index, basis_index) = 1.0;
    return rho;
}

}  // namespace qsim
