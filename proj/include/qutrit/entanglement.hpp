#pragma once

#include <array>

#include "qutrit/density_matrix.hpp"

namespace qutrit {

// Entangled flag threshold: the absolute-eigenvalue sum of the partially
// transposed matrix equals 1 exactly on PPT states, so anything above
// 1 + kNegativityslack witnesses entanglement.
inline constexpr double kNegativitySlack = 1e-9;

struct NegativityResult {
    Spectrum ppt_spectrum;  // full spectrum of the partially transposed matrix
    double sum = 0.0;       // sum of absolute eigenvalues
    bool entangled = false;
};

/// Pads the qutrit to 4x4, partially transposes the second (2,2) factor and
/// reports the spectrum, the absolute-eigenvalue sum and the entangled flag.
NegativityResult negativity(const DensityMatrix& qutrit_state);

/// (sigma_y (x) sigma_y) conj(m) (sigma_y (x) sigma_y) on a 4x4 matrix.
ComplexMatrix spin_flip(const ComplexMatrix& m);

struct ConcurrenceResult {
    double value = 0.0;             // max{0, sqrt(l1) - sqrt(l2) - sqrt(l3) - sqrt(l4)}
    std::array<double, 4> lambda{};  // eigenvalues of m * spin_flip(m), descending
};

/// Wootters concurrence of a 4x4 state. The eigenvalues of m * spin_flip(m)
/// are computed as the spectrum of sqrt(m) * spin_flip(m) * sqrt(m), which is
/// Hermitian PSD and shares the characteristic polynomial.
ConcurrenceResult concurrence(const DensityMatrix& m);

/// Closed-form eigenvalues of the spin-flip product for a real qutrit state,
/// in formula order (plus branch first, then minus, then the two zeros).
/// Sorted against the numeric route they agree to 1e-9.
std::array<double, 4> closed_form_lambda_real(const DensityMatrix& qutrit_state);

/// True iff m equals kron of its two reductions within tol (uncorrelated).
bool is_product_state(const DensityMatrix& m, double tol);

struct EntanglementReport {
    Spectrum ppt_spectrum;
    double negativity_sum = 0.0;
    bool entangled_by_ppt = false;
    double concurrence = 0.0;
    std::array<double, 4> lambda_c{};  // descending
};

/// Full diagnostic bundle for a qutrit state: negativity route plus the
/// concurrence of the padded matrix.
EntanglementReport entanglement_report(const DensityMatrix& qutrit_state);

}  // namespace qutrit
