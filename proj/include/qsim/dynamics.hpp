// dynamics.hpp — Direct fixed-step RK4 integration of the no-jump amplitude
// system and of the full Lindblad master equation. These integrators are the
// independent cross-check for the closed forms and for the Monte Carlo
// ensemble, so they stay deliberately plain: no adaptivity, no
// renormalization, trace drift left visible as a diagnostic.

#pragma once

#include <vector>

#include "qsim/analytic.hpp"
#include "qsim/numerics.hpp"
#include "qsim/params.hpp"

namespace qsim {

struct IntegratorConfig {
    double dt{1e-3};
    double t_max{10.0};
    int sample_stride{1};  // emit every sample_stride-th step (step 0 included)

    void validate() const;  // throws std::invalid_argument
};

struct DensitySample {
    double t{0.0};
    Matrix5 rho{Matrix5::Zero()};
};

// RK4 trajectory of the four coupled amplitude ODEs generated by the
// effective Hamiltonian, starting from alpha = 1. The final step is always
// emitted even when it is not a stride multiple.
std::vector<AmplitudeState> integrate_schrodinger(const SystemParams& params,
                                                  const IntegratorConfig& cfg);

// RK4 trajectory of
//   d rho/dt = -i[H, rho] + sum_i (J_i rho J_i^+ - {J_i^+ J_i, rho}/2)
// from the given initial state. No trace renormalization is applied.
std::vector<DensitySample> integrate_master(const SystemParams& params,
                                            const IntegratorConfig& cfg,
                                            const Matrix5& rho0);

// Stationary initial states used throughout the tests.
Matrix5 pure_state(int basis_index);

}  // namespace qsim
