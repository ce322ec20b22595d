// model.hpp — Explicit 5x5 operators of the cascaded two-node model: the
// Hermitian Hamiltonian, the five jump operators, and the non-Hermitian
// effective Hamiltonian that generates the no-jump evolution.

#pragma once

#include <array>

#include "qsim/numerics.hpp"
#include "qsim/params.hpp"

namespace qsim {

// The five irreversible decay channels, in jump-operator order.
enum class JumpChannel : int {
    collective_emission = 0,  // photon leaves via the cavity output mirrors
    absorption_a = 1,         // photon absorbed/scattered by cavity A mirrors
    absorption_b = 2,
    spontaneous_a = 3,        // atom A emits into free space
    spontaneous_b = 4,
};

inline constexpr int kNumJumpChannels = 5;

enum class OperatorLabel {
    hamiltonian,
    effective_hamiltonian,
    jump_1,
    jump_2,
    jump_3,
    jump_4,
    jump_5,
};

struct OperatorMatrix {
    Matrix5 entries;
    OperatorLabel label;
};

// Hermitian Hamiltonian: Jaynes-Cummings coupling and detuning on each node
// plus the unidirectional cascade term coupling the two cavity modes.
OperatorMatrix build_hamiltonian(const SystemParams& params);

// Jump operators. Every channel maps the excited manifold into the joint
// ground state, so each matrix has support only in the ground-state row.
std::array<OperatorMatrix, kNumJumpChannels> build_jump_operators(
    const SystemParams& params);

// H_eff = H - (i/2) sum_i J_i^dagger J_i. Within the excited manifold the
// coupling runs from node A to node B only; the reverse element is zero.
OperatorMatrix build_effective_hamiltonian(const SystemParams& params);

}  // namespace qsim
