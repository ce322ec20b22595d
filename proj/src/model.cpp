#include "qsim/model.hpp"

#include <cmath>
#include <complex>

namespace qsim {

namespace {
constexpr cplx kI{0.0, 1.0};
}

OperatorMatrix build_hamiltonian(const SystemParams& p) {
    using namespace basis;
    Matrix5 h = Matrix5::Zero();

    h(atom_a, atom_a) = p.delta_a;
    h(atom_b, atom_b) = p.delta_b;
    h(atom_a, cavity_a) = p.g_a;
    h(cavity_a, atom_a) = p.g_a;
    h(atom_b, cavity_b) = p.g_b;
    h(cavity_b, atom_b) = p.g_b;

    // Cascade coupling between the cavity modes. The photon annihilated in
    // cavity B and recreated in cavity A gives <cavity_a|H|cavity_b>.
    const double rate = 0.5 * std::sqrt(p.kappa_a * p.kappa_b);
    h(cavity_a, cavity_b) = kI * rate * std::exp(-kI * p.phi);
    h(cavity_b, cavity_a) = -kI * rate * std::exp(kI * p.phi);

    return {h, OperatorLabel::hamiltonian};
}

std::array<OperatorMatrix, kNumJumpChannels> build_jump_operators(
    const SystemParams& p) {
    using namespace basis;
    std::array<OperatorMatrix, kNumJumpChannels> jumps;
    for (auto& j : jumps) {
        j.entries = Matrix5::Zero();
    }

    // Collective output channel: superposition of the fields radiated by the
    // two cavities; the photon cannot be attributed to either one alone.
    jumps[0].entries(ground, cavity_a) = std::sqrt(p.kappa_a);
    jumps[0].entries(ground, cavity_b) =
        std::sqrt(p.kappa_b) * std::exp(-kI * p.phi);
    jumps[0].label = OperatorLabel::jump_1;

    jumps[1].entries(ground, cavity_a) = std::sqrt(p.kappa_prime_a);
    jumps[1].label = OperatorLabel::jump_2;

    jumps[2].entries(ground, cavity_b) = std::sqrt(p.kappa_prime_b);
    jumps[2].label = OperatorLabel::jump_3;

    jumps[3].entries(ground, atom_a) = std::sqrt(p.gamma_a);
    jumps[3].label = OperatorLabel::jump_4;

    jumps[4].entries(ground, atom_b) = std::sqrt(p.gamma_b);
    jumps[4].label = OperatorLabel::jump_5;

    return jumps;
}

OperatorMatrix build_effective_hamiltonian(const SystemParams& p) {
    using namespace basis;
    Matrix5 h = Matrix5::Zero();

    h(atom_a, atom_a) = p.delta_a - kI * (0.5 * p.gamma_a);
    h(cavity_a, cavity_a) = -kI * (0.5 * p.total_loss_a());
    h(atom_b, atom_b) = p.delta_b - kI * (0.5 * p.gamma_b);
    h(cavity_b, cavity_b) = -kI * (0.5 * p.total_loss_b());
    h(atom_a, cavity_a) = p.g_a;
    h(cavity_a, atom_a) = p.g_a;
    h(atom_b, cavity_b) = p.g_b;
    h(cavity_b, atom_b) = p.g_b;

    // One-directional: cavity A feeds cavity B, never the reverse.
    h(cavity_b, cavity_a) =
        -kI * std::sqrt(p.kappa_a * p.kappa_b) * std::exp(kI * p.phi);

    return {h, OperatorLabel::effective_hamiltonian};
}

}  // namespace qsim
