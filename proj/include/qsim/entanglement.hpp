// entanglement.hpp — Two-qubit reduced states of the atom pair and of the
// intracavity-field pair, and their concurrence: the general Wootters
// eigenvalue route and the closed forms it collapses to for this model.

#pragma once

#include "qsim/numerics.hpp"

namespace qsim {

enum class Subsystem { atoms, cavities };

// 4x4 reduced density matrix in the fixed product basis
// (|0,0>, |0,1>, |1,0>, |1,1>), first factor = node A qubit.
struct QubitPairDensity {
    Matrix4 entries;
    Subsystem subsystem;
};

// Reduced state of the two atoms: trace over the intracavity fields.
QubitPairDensity partial_trace_cavities(const Matrix5& rho);

// Reduced state of the two intracavity fields: trace over the atoms.
QubitPairDensity partial_trace_atoms(const Matrix5& rho);

// Wootters concurrence from the spectrum of rho (sy x sy) rho^* (sy x sy).
// Result is clamped to [0, 1]. Throws std::invalid_argument when the input
// violates the Hermiticity or unit-trace invariants beyond tolerance.
double concurrence(const QubitPairDensity& rho);

// Closed forms for the reduced states arising in this model.
double concurrence_atoms_closed(cplx alpha, cplx gamma);
double concurrence_cavities_closed(cplx beta, cplx delta);

}  // namespace qsim
