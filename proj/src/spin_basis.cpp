#include "qutrit/spin_basis.hpp"

#include <cmath>

namespace qutrit {

const std::array<SpinBasisLabel, 4>& spin_basis_labels() {
    static const std::array<SpinBasisLabel, 4> labels{{{1, 1}, {1, 0}, {1, -1}, {0, 0}}};
    return labels;
}

const ComplexMatrix& coupling_basis_matrix() {
    static const ComplexMatrix c = [] {
        const double s = 1.0 / std::sqrt(2.0);
        ComplexMatrix m(4);
        m(0, 0) = 1.0;
        m(1, 1) = s;
        m(1, 2) = s;
        m(2, 1) = s;
        m(2, 2) = -s;
        m(3, 3) = 1.0;
        return m;
    }();
    return c;
}

DensityMatrix to_g_basis(const DensityMatrix& m) {
    if (m.dim() != 4)
        throw DimensionMismatch("basis conversion expects a 4x4 state, got " +
                                std::to_string(m.dim()));
    const ComplexMatrix& c = coupling_basis_matrix();
    return validate(adjoint(c) * m.matrix() * c);
}

DensityMatrix to_e_basis(const DensityMatrix& m) {
    if (m.dim() != 4)
        throw DimensionMismatch("basis conversion expects a 4x4 state, got " +
                                std::to_string(m.dim()));
    const ComplexMatrix& c = coupling_basis_matrix();
    return validate(c * m.matrix() * adjoint(c));
}

TruncationResult symmetric_truncation(const DensityMatrix& g_state, bool renormalize) {
    if (g_state.dim() != 4)
        throw DimensionMismatch("truncation expects a 4x4 state, got " +
                                std::to_string(g_state.dim()));
    TruncationResult res;
    res.singlet_weight = g_state(3, 3).real();
    res.matrix = g_state.matrix();
    for (int k = 0; k < 4; ++k) {
        res.matrix(3, k) = 0.0;
        res.matrix(k, 3) = 0.0;
    }
    if (renormalize) {
        if (res.singlet_weight >= 1.0 - 1e-12) throw SingletDominant(res.singlet_weight);
        res.matrix *= Complex(1.0 / (1.0 - res.singlet_weight), 0.0);
    }
    return res;
}

DensityMatrix qutrit_from_symmetric(const DensityMatrix& e_state) {
    const DensityMatrix g = to_g_basis(e_state);
    const TruncationResult cut = symmetric_truncation(g, /*renormalize=*/true);
    ComplexMatrix q(3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) q(i, j) = cut.matrix(i, j);
    return validate(q);
}

}  // namespace qutrit
