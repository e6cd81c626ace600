// types.hpp — project-wide scalar/matrix aliases and the shared tolerance record

#pragma once

#include <complex>

#include <Eigen/Dense>
#include <Eigen/Sparse>

namespace dynsync {

using Complex = std::complex<double>;
using DenseMatrix = Eigen::MatrixXcd;
using DenseVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using RealMatrix = Eigen::MatrixXd;
using SpMat = Eigen::SparseMatrix<Complex>;
using Triplet = Eigen::Triplet<Complex>;

inline constexpr Complex kImag{0.0, 1.0};

// Numerical tolerances used across the library. Kept in one record so a run
// can tighten or relax them coherently instead of editing scattered literals.
struct Tolerances {
    double atol = 1e-10;            // generic absolute comparison
    double hermiticity = 1e-12;     // ‖A − A†‖_F below which A counts as Hermitian
    double state_norm = 1e-12;      // allowed deviation of state norms from 1
    double trace_drift = 1e-9;      // |Tr ρ − 1| allowed during evolution
    double positivity_floor = -1e-7; // min eigenvalue below this aborts a run
    double mode_drop = 1e-12;       // Frobenius norm under which a ladder mode is zero
    double zero_mode_scale = 1e-8;  // |λ| < scale × spectral radius ⇒ kernel
};

inline const Tolerances& default_tolerances() {
    static const Tolerances tols{};
    return tols;
}

} // namespace dynsync
