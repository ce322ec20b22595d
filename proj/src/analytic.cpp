#include "qsim/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <tuple>

namespace qsim {

namespace {

constexpr cplx kI{0.0, 1.0};

// Node-local complex detuning Delta - i Gamma/2.
cplx complex_detuning(double delta, double gamma) {
    return {delta, -0.5 * gamma};
}

cplx omega_radicand(double total_loss, double g, cplx nu) {
    return 0.25 * total_loss * total_loss - 4.0 * g * g -
           kI * total_loss * nu - nu * nu;
}

// sinh(omega t / 2)/omega, even in omega; series-protected at omega -> 0
// where the expression tends to t/2.
cplx sinh_half_over(cplx omega, double t) {
    const cplx z = 0.5 * omega * t;
    if (std::abs(z) < 1e-4) {
        const cplx z2 = z * z;
        return 0.5 * t * (1.0 + z2 / 6.0 + z2 * z2 / 120.0);
    }
    return std::sinh(z) / omega;
}

// (e^{xt} - 1)/x with the fourth-order series taken when |x| falls below the
// switch threshold, keeping relative error ~1e-12 on both sides of the
// degenerate surface. `scale` is max(|omega_a|, |omega_b|, 1).
cplx expm1_over(cplx x, double t, double scale) {
    if (std::abs(x) * std::max(1.0, t) < 1e-6 * scale) {
        const cplx xt = x * t;
        return t * (1.0 + xt / 2.0 + xt * xt / 6.0 + xt * xt * xt / 24.0);
    }
    return (std::exp(x * t) - 1.0) / x;
}

}  // namespace

cplx omega(const SystemParams& p, Node node) {
    if (node == Node::A) {
        return std::sqrt(
            omega_radicand(p.total_loss_a(), p.g_a,
                           complex_detuning(p.delta_a, p.gamma_a)));
    }
    return std::sqrt(omega_radicand(p.total_loss_b(), p.g_b,
                                    complex_detuning(p.delta_b, p.gamma_b)));
}

OmegaConstants omega_constants(const SystemParams& p) {
    OmegaConstants c;
    c.omega_a = omega(p, Node::A);
    c.omega_b = omega(p, Node::B);
    c.upsilon =
        0.25 * (p.total_loss_a() - p.total_loss_b() + p.gamma_a - p.gamma_b);
    c.lambda = 0.5 * (p.delta_a - p.delta_b);
    return c;
}

std::pair<cplx, cplx> alpha_beta(const SystemParams& p, double t) {
    return alpha_beta(p, omega_constants(p), t);
}

std::pair<cplx, cplx> alpha_beta(const SystemParams& p,
                                 const OmegaConstants& consts, double t) {
    const double K_a = p.total_loss_a();
    const cplx nu_a = complex_detuning(p.delta_a, p.gamma_a);
    const cplx omega_a = consts.omega_a;

    const cplx envelope =
        std::exp(-(0.25 * (K_a + p.gamma_a) + kI * (0.5 * p.delta_a)) * t);
    const cplx sh = sinh_half_over(omega_a, t);  // sinh(omega t/2)/omega
    const cplx ch = std::cosh(0.5 * omega_a * t);

    const cplx alpha = ((0.5 * K_a - kI * nu_a) * sh + ch) * envelope;
    const cplx beta = -2.0 * kI * p.g_a * sh * envelope;
    return {alpha, beta};
}

std::pair<cplx, cplx> gamma_delta_general(const SystemParams& p, double t) {
    return gamma_delta_general(p, omega_constants(p), t);
}

std::pair<cplx, cplx> gamma_delta_general(const SystemParams& p,
                                          const OmegaConstants& consts,
                                          double t) {
    const double K_b = p.total_loss_b();
    const cplx omega_a = consts.omega_a;
    const cplx omega_b = consts.omega_b;
    const cplx shift{consts.upsilon, consts.lambda};  // Upsilon + i Lambda
    const double scale =
        std::max({std::abs(omega_a), std::abs(omega_b), 1.0});

    // f_pm carry the driven node's decay envelope and the cascade strength;
    // g_pm and h_pm are the series-protected (e^{xt}-1)/x factors.
    const cplx f_prefactor = p.g_a * std::sqrt(p.kappa_a * p.kappa_b) *
                             std::exp(kI * p.phi) / (omega_a * omega_b);
    const cplx decay_b = -0.25 * (K_b + p.gamma_b) - kI * (0.5 * p.delta_b);
    const cplx f_plus = f_prefactor * std::exp((decay_b + 0.5 * omega_b) * t);
    const cplx f_minus = f_prefactor * std::exp((decay_b - 0.5 * omega_b) * t);

    const cplx half_sum = 0.5 * (omega_a + omega_b);
    const cplx half_diff = 0.5 * (omega_a - omega_b);
    const cplx g_plus = expm1_over(half_sum - shift, t, scale);
    const cplx g_minus = expm1_over(half_diff - shift, t, scale);
    // h_pm(t) = (e^{-xt} - 1)/x = -(e^{(-x)t} - 1)/(-x)
    const cplx h_plus = -expm1_over(-(half_sum + shift), t, scale);
    const cplx h_minus = -expm1_over(-(half_diff + shift), t, scale);

    const cplx branch_plus = g_minus + h_plus;
    const cplx branch_minus = g_plus + h_minus;

    const cplx gamma =
        p.g_b * (f_plus * branch_plus - f_minus * branch_minus);

    const cplx q = 0.25 * (K_b - p.gamma_b) - kI * (0.5 * p.delta_b);
    const cplx delta = kI * (q + 0.5 * omega_b) * f_minus * branch_minus -
                       kI * (q - 0.5 * omega_b) * f_plus * branch_plus;
    return {gamma, delta};
}

std::pair<cplx, cplx> gamma_delta_equal(const SystemParams& p, double t) {
    if (!p.nodes_equal()) {
        throw std::invalid_argument(
            "gamma_delta_equal: node parameters differ; use "
            "gamma_delta_general");
    }
    const double g = p.g_a;
    const double kappa = p.kappa_a;
    const double K = p.total_loss_a();
    const double gamma_rate = p.gamma_a;
    const double delta_det = p.delta_a;
    const cplx om = omega(p, Node::A);

    const cplx decay = -0.25 * (K + gamma_rate) - kI * (0.5 * delta_det);
    const cplx env_plus = std::exp((decay + 0.5 * om) * t);
    const cplx env_minus = std::exp((decay - 0.5 * om) * t);
    // [e^{-wt} + wt - 1] pairs with the +w/2 envelope and vice versa.
    const cplx rise_plus = std::exp(-om * t) + om * t - 1.0;
    const cplx rise_minus = std::exp(om * t) - om * t - 1.0;

    const cplx om3 = om * om * om;
    const cplx pref_gamma = kappa * g * g * std::exp(kI * p.phi) / om3;
    const cplx gamma_amp =
        pref_gamma * (rise_plus * env_plus - rise_minus * env_minus);

    const cplx q = 0.25 * (K - gamma_rate) - kI * (0.5 * delta_det);
    const cplx pref_delta = kI * kappa * g * std::exp(kI * p.phi) / om3;
    const cplx delta_amp =
        pref_delta * ((q + 0.5 * om) * rise_minus * env_minus -
                      (q - 0.5 * om) * rise_plus * env_plus);
    return {gamma_amp, delta_amp};
}

AmplitudeState amplitudes(const SystemParams& p, double t) {
    return amplitudes(p, omega_constants(p), t);
}

AmplitudeState amplitudes(const SystemParams& p, const OmegaConstants& consts,
                          double t) {
    AmplitudeState s;
    s.t = t;
    std::tie(s.alpha, s.beta) = alpha_beta(p, consts, t);
    if (p.nodes_equal()) {
        std::tie(s.gamma, s.delta) = gamma_delta_equal(p, t);
    } else {
        std::tie(s.gamma, s.delta) = gamma_delta_general(p, consts, t);
    }
    s.eps_sq = std::clamp(1.0 - p_no(s), 0.0, 1.0);
    return s;
}

double p_no(const AmplitudeState& s) {
    return std::norm(s.alpha) + std::norm(s.beta) + std::norm(s.gamma) +
           std::norm(s.delta);
}

Matrix5 density_matrix(const AmplitudeState& s) {
    Vector5 psi;
    psi << s.alpha, s.beta, s.gamma, s.delta, cplx{0.0, 0.0};
    Matrix5 rho = psi * psi.adjoint();
    rho(basis::ground, basis::ground) += s.eps_sq;
    return rho;
}

}  // namespace qsim
