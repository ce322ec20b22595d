#include "qsim/numerics.hpp"

#include <Eigen/Eigenvalues>

#include <stdexcept>

namespace qsim {

std::array<cplx, 4> eig4(const Matrix4& m) {
    Eigen::ComplexEigenSolver<Matrix4> solver(m, /*computeEigenvectors=*/false);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("eig4: eigenvalue iteration did not converge");
    }
    const auto& ev = solver.eigenvalues();
    return {ev(0), ev(1), ev(2), ev(3)};
}

double max_abs(const Matrix5& m) { return m.cwiseAbs().maxCoeff(); }
double max_abs(const Matrix4& m) { return m.cwiseAbs().maxCoeff(); }

double hermiticity_defect(const Matrix5& m) {
    return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

double hermiticity_defect(const Matrix4& m) {
    return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

}  // namespace qsim
