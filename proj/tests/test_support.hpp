// Shared helpers for the test suites: deterministic random generators for
// parameter sets and states, and an independent Jacobi eigensolver used as
// the oracle for the general 4x4 eigensolver.

#pragma once

#include <array>
#include <cmath>
#include <random>

#include "qsim/analytic.hpp"
#include "qsim/numerics.hpp"
#include "qsim/params.hpp"

namespace qsim::test {

inline std::mt19937_64 make_rng(std::uint64_t seed) {
    return std::mt19937_64{seed};
}

// Valid parameter set with moderate rates, generally unequal nodes.
inline SystemParams random_params(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> g(0.5, 6.0);
    std::uniform_real_distribution<double> kappa(0.2, 1.2);
    std::uniform_real_distribution<double> kappa_prime(0.0, 0.3);
    std::uniform_real_distribution<double> gamma(0.0, 0.5);
    std::uniform_real_distribution<double> delta(-1.0, 1.0);
    std::uniform_real_distribution<double> phase(0.0, 2.0 * M_PI);
    SystemParams p;
    p.g_a = g(rng);
    p.g_b = g(rng);
    p.kappa_a = kappa(rng);
    p.kappa_b = kappa(rng);
    p.kappa_prime_a = kappa_prime(rng);
    p.kappa_prime_b = kappa_prime(rng);
    p.gamma_a = gamma(rng);
    p.gamma_b = gamma(rng);
    p.delta_a = delta(rng);
    p.delta_b = delta(rng);
    p.phi = phase(rng);
    return p;
}

inline cplx random_unit_complex(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    return {u(rng), u(rng)};
}

// Physical amplitude snapshot: total excited population at most 1, the
// remainder assigned to the ground state.
inline AmplitudeState random_amplitude_state(std::mt19937_64& rng) {
    AmplitudeState s;
    s.alpha = random_unit_complex(rng);
    s.beta = random_unit_complex(rng);
    s.gamma = random_unit_complex(rng);
    s.delta = random_unit_complex(rng);
    std::uniform_real_distribution<double> frac(0.0, 1.0);
    const double norm = std::sqrt(p_no(s));
    const double target = frac(rng);  // excited weight after rescaling
    const double scale = std::sqrt(target) / norm;
    s.alpha *= scale;
    s.beta *= scale;
    s.gamma *= scale;
    s.delta *= scale;
    s.eps_sq = 1.0 - p_no(s);
    s.t = 0.0;
    return s;
}

inline Matrix4 random_matrix4(std::mt19937_64& rng, double magnitude = 1.0) {
    Matrix4 m;
    for (int r = 0; r < 4; ++r) {
        for (int c = 0; c < 4; ++c) {
            m(r, c) = magnitude * random_unit_complex(rng);
        }
    }
    return m;
}

inline Matrix4 random_hermitian4(std::mt19937_64& rng) {
    const Matrix4 m = random_matrix4(rng);
    return 0.5 * (m + m.adjoint());
}

inline Matrix4 random_unitary4(std::mt19937_64& rng) {
    const Eigen::HouseholderQR<Matrix4> qr(random_matrix4(rng));
    return qr.householderQ();
}

// Cyclic Jacobi diagonalization for Hermitian 4x4 matrices; independent of
// the production eigensolver. Returns eigenvalues sorted descending.
inline std::array<double, 4> jacobi_eigenvalues(Matrix4 a) {
    for (int sweep = 0; sweep < 60; ++sweep) {
        double off = 0.0;
        for (int p = 0; p < 4; ++p) {
            for (int q = p + 1; q < 4; ++q) {
                off += std::norm(a(p, q));
            }
        }
        if (off < 1e-30) {
            break;
        }
        for (int p = 0; p < 4; ++p) {
            for (int q = p + 1; q < 4; ++q) {
                if (std::abs(a(p, q)) < 1e-300) {
                    continue;
                }
                // Unitary rotation in the (p,q) plane annihilating a(p,q).
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                const cplx apq = a(p, q);
                const double theta_den = aqq - app;
                const double abs_apq = std::abs(apq);
                double t;  // tangent of the rotation angle
                if (std::abs(theta_den) < 1e-300) {
                    t = 1.0;
                } else {
                    const double theta = theta_den / (2.0 * abs_apq);
                    t = ((theta >= 0) ? 1.0 : -1.0) /
                        (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                }
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s_mag = t * c;
                const cplx phase = apq / abs_apq;
                const cplx s = s_mag * phase;

                Matrix4 rot = Matrix4::Identity();
                rot(p, p) = c;
                rot(q, q) = c;
                rot(p, q) = s;
                rot(q, p) = -std::conj(s);
                a = (rot.adjoint() * a * rot).eval();
            }
        }
    }
    std::array<double, 4> ev{a(0, 0).real(), a(1, 1).real(), a(2, 2).real(),
                             a(3, 3).real()};
    std::sort(ev.begin(), ev.end(), std::greater<double>());
    return ev;
}

inline double max_entry_diff(const Matrix5& a, const Matrix5& b) {
    return (a - b).cwiseAbs().maxCoeff();
}

inline double max_entry_diff(const Matrix4& a, const Matrix4& b) {
    return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace qsim::test
