#pragma once

#include <array>

#include "qutrit/density_matrix.hpp"

namespace qutrit {

/// Total-spin label for one product basis slot: j in {0, 1}, m in {-1, 0, 1},
/// |m| <= j. Frozen order: |1,1>, |1,0>, |1,-1>, |0,0>.
struct SpinBasisLabel {
    int j;
    int m;
};
const std::array<SpinBasisLabel, 4>& spin_basis_labels();

/// The fixed change-of-basis matrix between the product basis and the
/// triplet/singlet basis: entries in {0, 1, 1/sqrt2, -1/sqrt2}, real,
/// symmetric, self-inverse, unitary.
const ComplexMatrix& coupling_basis_matrix();

/// Congruence by the coupling matrix: C† m C. Spectrum is preserved.
DensityMatrix to_g_basis(const DensityMatrix& m);

/// Inverse conversion (the coupling matrix is self-inverse).
DensityMatrix to_e_basis(const DensityMatrix& m);

struct TruncationResult {
    ComplexMatrix matrix;         // 4x4 with zeroed fourth row/column
    double singlet_weight = 0.0;  // the (4,4) entry removed
};

/// Zero the fourth row/column of a g-basis state. Raw mode keeps the trace
/// deficit (trace = 1 - singlet_weight); renormalize divides the remainder by
/// 1 - singlet_weight and throws SingletDominant when nothing remains.
TruncationResult symmetric_truncation(const DensityMatrix& g_state, bool renormalize);

/// e-basis 4x4 state -> g basis -> renormalized truncation -> top-left 3x3
/// block as a validated qutrit state.
DensityMatrix qutrit_from_symmetric(const DensityMatrix& e_state);

}  // namespace qutrit
