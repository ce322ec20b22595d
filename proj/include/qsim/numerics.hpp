// numerics.hpp — Small-dimension complex linear algebra shared by all modules:
// fixed-size matrix aliases, the classic RK4 stepping kernel, and a general
// 4x4 complex eigensolver.

#pragma once

#include <Eigen/Dense>

#include <array>
#include <complex>
#include <utility>

namespace qsim {

using cplx = std::complex<double>;

using Matrix5 = Eigen::Matrix<cplx, 5, 5>;
using Matrix4 = Eigen::Matrix<cplx, 4, 4>;
using Vector5 = Eigen::Matrix<cplx, 5, 1>;
using Vector4 = Eigen::Matrix<cplx, 4, 1>;

// Index of each basis state of the single-excitation Hilbert space, in the
// fixed ordering used by every 5x5 matrix in this library:
//   0  excitation in atom A        (|a>)
//   1  photon in cavity A          (|b>)
//   2  excitation in atom B        (|c>)
//   3  photon in cavity B          (|d>)
//   4  joint ground state          (|e>)
namespace basis {
inline constexpr int atom_a = 0;
inline constexpr int cavity_a = 1;
inline constexpr int atom_b = 2;
inline constexpr int cavity_b = 3;
inline constexpr int ground = 4;
inline constexpr int dim = 5;
}  // namespace basis

// One classic fixed-step 4th-order Runge-Kutta update. The state type needs
// vector-space arithmetic (Eigen matrices and std::complex both qualify).
// The input state is not mutated.
template <class State, class Derivative>
State rk4_step(Derivative&& f, double t, const State& y, double dt) {
    const State k1 = f(t, y);
    const State k2 = f(t + 0.5 * dt, State(y + (0.5 * dt) * k1));
    const State k3 = f(t + 0.5 * dt, State(y + (0.5 * dt) * k2));
    const State k4 = f(t + dt, State(y + dt * k3));
    return State(y + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4));
}

// Eigenvalues of a general (non-Hermitian) complex 4x4 matrix, unordered.
// Throws std::runtime_error if the iteration fails to converge.
std::array<cplx, 4> eig4(const Matrix4& m);

// Largest entry modulus; zero for an all-zero matrix.
double max_abs(const Matrix5& m);
double max_abs(const Matrix4& m);

// Deviation from Hermiticity, max |m - m^dagger| over entries.
double hermiticity_defect(const Matrix5& m);
double hermiticity_defect(const Matrix4& m);

}  // namespace qsim
