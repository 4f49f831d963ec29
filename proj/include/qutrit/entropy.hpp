#pragma once

#include <span>
#include <utility>
#include <vector>

#include "qutrit/density_matrix.hpp"

namespace qutrit {

enum class EntropyRoute {
    TwoQubit,      // 4x4 input with a (2,2) split, genuine reductions
    PaddedQutrit,  // 3x3 input, corner-padded, artificial qubit reductions
    Padded6x6,     // 4x4 input, center-padded to 6x6, (2,3) reductions
};

const char* to_string(EntropyRoute route);

/// Entropies in nats plus the information iq = s1 + s2 - s12, computed as
/// exactly that expression. Subadditivity makes iq >= 0 up to roundoff.
struct EntropyReport {
    double s1 = 0.0;
    double s2 = 0.0;
    double s12 = 0.0;
    double iq = 0.0;
    EntropyRoute route = EntropyRoute::TwoQubit;
};

/// -sum(lambda ln lambda) over the spectrum, eigenvalues clamped to [0, 1],
/// values below 1e-15 contributing exactly zero.
double von_neumann_entropy(const DensityMatrix& m);

/// Route semantics:
///  - TwoQubit: m.dim == 4, requires a (2,2) split (NoSplit otherwise).
///  - PaddedQutrit: m.dim == 3; pads internally, reductions via the
///    artificial-qubit formulas, s12 from the padded spectrum.
///  - Padded6x6: m.dim == 4; pads internally, reductions via the generic
///    (2,3) partial traces of the padded matrix.
EntropyReport subadditivity_report(const DensityMatrix& m, EntropyRoute route);

/// iq over the diagonal one-parameter qutrit family, one pair (b, iq) per
/// grid point, in grid order. Grid points must lie in [-1, 1/2].
/// The unsuffixed version may evaluate points in parallel; the _serial one
/// is the reference loop. Outputs are identical.
std::vector<std::pair<double, double>> iq_curve_eq16(std::span<const double> b_grid);
std::vector<std::pair<double, double>> iq_curve_eq16_serial(std::span<const double> b_grid);

}  // namespace qutrit
