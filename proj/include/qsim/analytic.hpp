// analytic.hpp — Closed-form no-jump amplitudes of the cascaded two-node
// system and the density operator reconstructed from them.
//
// The unnormalized no-jump state is
//     |psi(t)> = alpha|a> + beta|b> + gamma|c> + delta|d>,
// with the excitation starting in atom A (alpha(0) = 1). Its squared norm is
// the no-jump probability p_no(t); the missing weight 1 - p_no(t) sits in the
// joint ground state. The source-node pair (alpha, beta) evolves
// autonomously; (gamma, delta) is driven by beta through the cascade.

#pragma once

#include <complex>
#include <utility>

#include "qsim/numerics.hpp"
#include "qsim/params.hpp"

namespace qsim {

enum class Node { A, B };

// Snapshot of the no-jump amplitudes at one instant. eps_sq is the ground
// state population 1 - p_no, stored so the state stays self-consistent after
// ensemble averaging.
struct AmplitudeState {
    double t{0.0};
    cplx alpha{1.0, 0.0};
    cplx beta{0.0, 0.0};
    cplx gamma{0.0, 0.0};
    cplx delta{0.0, 0.0};
    double eps_sq{0.0};
};

// Per-node complex rates entering the closed forms. omega_k is the principal
// branch square root of
//     K_k^2/4 - 4 g_k^2 - i K_k (Delta_k - i Gamma_k/2) - (Delta_k - i Gamma_k/2)^2;
// every result below is an even function of each omega, so the branch choice
// cannot leak into observables. upsilon and lambda are the node asymmetries
// (K_a - K_b + Gamma_a - Gamma_b)/4 and (Delta_a - Delta_b)/2.
struct OmegaConstants {
    cplx omega_a;
    cplx omega_b;
    double upsilon;
    double lambda;
};

cplx omega(const SystemParams& params, Node node);
OmegaConstants omega_constants(const SystemParams& params);

// Source-node amplitudes for the initial condition alpha(0)=1, beta(0)=0.
std::pair<cplx, cplx> alpha_beta(const SystemParams& params, double t);
std::pair<cplx, cplx> alpha_beta(const SystemParams& params,
                                 const OmegaConstants& consts, double t);

// Target-node amplitudes, general (unequal-node) solution; gamma(0)=delta(0)=0.
// Degenerate denominators are handled by a series-protected evaluation of
// (e^{xt}-1)/x, so the formula is total on the parameter space.
std::pair<cplx, cplx> gamma_delta_general(const SystemParams& params, double t);
std::pair<cplx, cplx> gamma_delta_general(const SystemParams& params,
                                          const OmegaConstants& consts, double t);

// Simplified solution valid only when the two nodes carry equal parameters;
// throws std::invalid_argument otherwise (use gamma_delta_general then).
std::pair<cplx, cplx> gamma_delta_equal(const SystemParams& params, double t);

// All four amplitudes at time t, routing the target node through the equal or
// the general form as appropriate.
AmplitudeState amplitudes(const SystemParams& params, double t);
AmplitudeState amplitudes(const SystemParams& params, const OmegaConstants& consts,
                          double t);

// No-jump probability |alpha|^2 + |beta|^2 + |gamma|^2 + |delta|^2.
double p_no(const AmplitudeState& state);

// Ensemble density operator |psi(t)><psi(t)| + eps_sq |ground><ground|:
// rank <= 2, Hermitian, unit trace.
Matrix5 density_matrix(const AmplitudeState& state);

}  // namespace qsim
