#include "qsim/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qsim {

namespace {

// Two-qubit basis indices in the fixed ordering (|0,0>, |0,1>, |1,0>, |1,1>).
constexpr int k00 = 0;
constexpr int k01 = 1;
constexpr int k10 = 2;
constexpr int k11 = 3;

Matrix4 spin_flip() {
    // sigma_y (x) sigma_y: antidiagonal (-1, 1, 1, -1) in this ordering.
    Matrix4 f = Matrix4::Zero();
    f(k00, k11) = -1.0;
    f(k01, k10) = 1.0;
    f(k10, k01) = 1.0;
    f(k11, k00) = -1.0;
    return f;
}

}  // namespace

QubitPairDensity partial_trace_cavities(const Matrix5& rho) {
    using namespace basis;
    Matrix4 r = Matrix4::Zero();
    // Atom excitations map to the qubit basis; all cavity-photon states and
    // the ground state land in |0,0>. Coherences survive only between basis
    // states whose cavity factors coincide (both in vacuum).
    r(k10, k10) = rho(atom_a, atom_a);
    r(k01, k01) = rho(atom_b, atom_b);
    r(k10, k01) = rho(atom_a, atom_b);
    r(k01, k10) = rho(atom_b, atom_a);
    r(k00, k00) = rho(cavity_a, cavity_a) + rho(cavity_b, cavity_b) +
                  rho(ground, ground);
    r(k10, k00) = rho(atom_a, ground);
    r(k00, k10) = rho(ground, atom_a);
    r(k01, k00) = rho(atom_b, ground);
    r(k00, k01) = rho(ground, atom_b);
    return {r, Subsystem::atoms};
}

QubitPairDensity partial_trace_atoms(const Matrix5& rho) {
    using namespace basis;
    Matrix4 r = Matrix4::Zero();
    r(k10, k10) = rho(cavity_a, cavity_a);
    r(k01, k01) = rho(cavity_b, cavity_b);
    r(k10, k01) = rho(cavity_a, cavity_b);
    r(k01, k10) = rho(cavity_b, cavity_a);
    r(k00, k00) =
        rho(atom_a, atom_a) + rho(atom_b, atom_b) + rho(ground, ground);
    r(k10, k00) = rho(cavity_a, ground);
    r(k00, k10) = rho(ground, cavity_a);
    r(k01, k00) = rho(cavity_b, ground);
    r(k00, k01) = rho(ground, cavity_b);
    return {r, Subsystem::cavities};
}

double concurrence(const QubitPairDensity& pair) {
    const Matrix4& rho = pair.entries;
    if (hermiticity_defect(rho) > 1e-8) {
        throw std::invalid_argument("concurrence: density matrix not Hermitian");
    }
    if (std::abs(rho.trace() - cplx{1.0, 0.0}) > 1e-6) {
        throw std::invalid_argument("concurrence: density matrix trace is not 1");
    }

    const Matrix4 flip = spin_flip();
    const Matrix4 rho_tilde = flip * rho.conjugate() * flip;
    const Matrix4 product = rho * rho_tilde;

    // The product is non-normal but its exact spectrum is real nonnegative;
    // discard the numerically tiny imaginary parts and clamp negatives.
    auto eigenvalues = eig4(product);
    std::array<double, 4> lambdas{};
    for (std::size_t i = 0; i < 4; ++i) {
        if (std::abs(eigenvalues[i].imag()) > 1e-9) {
            throw std::invalid_argument(
                "concurrence: spectrum has a non-real eigenvalue; input is not "
                "a valid two-qubit density matrix");
        }
        lambdas[i] = std::max(0.0, eigenvalues[i].real());
    }
    std::sort(lambdas.begin(), lambdas.end(), std::greater<double>());

    const double c = std::sqrt(lambdas[0]) - std::sqrt(lambdas[1]) -
                     std::sqrt(lambdas[2]) - std::sqrt(lambdas[3]);
    return std::clamp(c, 0.0, 1.0);
}

double concurrence_atoms_closed(cplx alpha, cplx gamma) {
    return 2.0 * std::abs(alpha) * std::abs(gamma);
}

double concurrence_cavities_closed(cplx beta, cplx delta) {
    return 2.0 * std::abs(beta) * std::abs(delta);
}

}  // namespace qsim
