#include "qutrit/entanglement.hpp"

#include <algorithm>
#include <cmath>

namespace qutrit {

namespace {

const ComplexMatrix& spin_flip_conjugator() {
    // kron(sigma_y, sigma_y): real anti-diagonal (-1, 1, 1, -1).
    static const ComplexMatrix f = kron(pauli_y(), pauli_y());
    return f;
}

void hermitize(ComplexMatrix& m) {
    for (int i = 0; i < m.dim(); ++i) {
        m(i, i) = Complex(m(i, i).real(), 0.0);
        for (int j = i + 1; j < m.dim(); ++j) {
            const Complex v = 0.5 * (m(i, j) + std::conj(m(j, i)));
            m(i, j) = v;
            m(j, i) = std::conj(v);
        }
    }
}

}  // namespace

NegativityResult negativity(const DensityMatrix& qutrit_state) {
    if (qutrit_state.dim() != 3)
        throw DimensionMismatch("negativity expects a 3x3 state, got " +
                                std::to_string(qutrit_state.dim()));
    const PaddedState padded = pad_qutrit_to_4(qutrit_state);
    const ComplexMatrix ppt = partial_transpose(padded.padded, Subsystem::B);
    NegativityResult res;
    res.ppt_spectrum = hermitian_spectrum(ppt);
    for (double lam : res.ppt_spectrum.values) res.sum += std::abs(lam);
    res.entangled = res.sum > 1.0 + kNegativitySlack;
    return res;
}

ComplexMatrix spin_flip(const ComplexMatrix& m) {
    if (m.dim() != 4)
        throw DimensionMismatch("spin flip expects a 4x4 matrix, got " +
                                std::to_string(m.dim()));
    const ComplexMatrix& f = spin_flip_conjugator();
    return f * conjugate(m) * f;
}

ConcurrenceResult concurrence(const DensityMatrix& m) {
    if (m.dim() != 4)
        throw DimensionMismatch("concurrence expects a 4x4 state, got " +
                                std::to_string(m.dim()));
    const ComplexMatrix root = hermitian_sqrt(m.matrix());
    ComplexMatrix h = root * spin_flip(m.matrix()) * root;
    hermitize(h);
    const Spectrum spec = hermitian_spectrum(h);

    ConcurrenceResult res;
    // Exact-zero eigenvalues (padded and product states guarantee them) come
    // back as O(1e-17) solver noise; the square root would blow that up to
    // ~1e-8, so anything below the noise floor counts as zero.
    constexpr double noise_floor = 1e-15;
    for (size_t k = 0; k < 4; ++k)
        res.lambda[k] = spec.values[k] > noise_floor ? spec.values[k] : 0.0;
    double c = std::sqrt(res.lambda[0]);
    for (size_t k = 1; k < 4; ++k) c -= std::sqrt(res.lambda[k]);
    res.value = std::clamp(c, 0.0, 1.0);
    return res;
}

std::array<double, 4> closed_form_lambda_real(const DensityMatrix& qutrit_state) {
    if (qutrit_state.dim() != 3)
        throw DimensionMismatch("closed-form lambda expects a 3x3 state");
    double max_imag = 0.0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            max_imag = std::max(max_imag, std::abs(qutrit_state(i, j).imag()));
    if (max_imag > 1e-14) throw NotReal(max_imag);

    const double r22 = qutrit_state(1, 1).real();
    const double r33 = qutrit_state(2, 2).real();
    const double r23 = qutrit_state(1, 2).real();
    const double r32 = qutrit_state(2, 1).real();
    const double rad = r23 * r23 - 2.0 * r23 * r32 + r32 * r32 + 4.0 * r22 * r33;
    const double root = std::sqrt(std::max(rad, 0.0));
    const double base = (r23 * r23 + r32 * r32) / 2.0 + r22 * r33;
    const double cross = (r23 + r32) * root / 2.0;
    return {base + cross, base - cross, 0.0, 0.0};
}

bool is_product_state(const DensityMatrix& m, double tol) {
    if (!m.split()) throw NoSplit("product test requires a bipartite split");
    const DensityMatrix a = partial_trace(m, Subsystem::A);
    const DensityMatrix b = partial_trace(m, Subsystem::B);
    return max_abs_diff(m.matrix(), kron(a.matrix(), b.matrix())) <= tol;
}

EntanglementReport entanglement_report(const DensityMatrix& qutrit_state) {
    EntanglementReport rep;
    NegativityResult neg = negativity(qutrit_state);
    rep.ppt_spectrum = std::move(neg.ppt_spectrum);
    rep.negativity_sum = neg.sum;
    rep.entangled_by_ppt = neg.entangled;
    const ConcurrenceResult c = concurrence(pad_qutrit_to_4(qutrit_state).padded);
    rep.concurrence = c.value;
    rep.lambda_c = c.lambda;
    return rep;
}

}  // namespace qutrit
