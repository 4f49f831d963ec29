#pragma once

#include <vector>

#include "qutrit/complex_matrix.hpp"

namespace qutrit {

// Convergence tolerance on the off-diagonal Frobenius norm.
inline constexpr double kJacobiTol = 1e-12;
inline constexpr int kJacobiSweepBudget = 100;

// Relative Hermiticity precondition: max |m(i,j) - conj(m(j,i))| against
// this times the max-abs entry.
inline constexpr double kHermitianRelTol = 1e-12;

// Eigenvalues below -kPsdClamp fail PSD checks; values in (-kPsdClamp, 0)
// are treated as roundoff from exact zeros (zero-padded states live on the
// PSD boundary).
inline constexpr double kPsdClamp = 1e-10;

/// Real eigenvalues sorted descending, plus the max off-diagonal magnitude
/// left after diagonalization.
struct Spectrum {
    std::vector<double> values;
    double residual = 0.0;

    double min() const;
    double max() const;
    double sum() const;
};

struct HermitianEigen {
    std::vector<double> values;  // descending
    ComplexMatrix vectors;       // column k pairs with values[k]
    double residual = 0.0;
};

/// Cyclic Jacobi with complex Givens rotations. Throws NotHermitian if the
/// input violates the relative Hermiticity bound, NoConvergence if the sweep
/// budget runs out.
HermitianEigen hermitian_eigendecomposition(const ComplexMatrix& m, double tol = kJacobiTol);

Spectrum hermitian_spectrum(const ComplexMatrix& m, double tol = kJacobiTol);

/// Hermitian PSD square root; eigenvalues in [-kPsdClamp, 0) are clamped to
/// zero, anything lower throws NotPSD.
ComplexMatrix hermitian_sqrt(const ComplexMatrix& m);

}  // namespace qutrit
