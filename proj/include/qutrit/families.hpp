#pragma once

#include <array>
#include <vector>

#include "qutrit/density_matrix.hpp"

namespace qutrit {

enum class Family { Eq16, Eq22 };

/// Diagonal one-parameter family diag(1+b, 1+b, 1-2b)/3, b in [-1, 1/2].
struct Eq16Param {
    double b;
};

/// Two-parameter family [[p, 0, 0], [0, 1-2p, b], [0, b, p]].
/// Positivity demands 0 <= p, 1 - 2p >= 0, b^2 <= p(1 - 2p).
struct Eq22Param {
    double p;
    double b;
};

inline constexpr double kDomainSlack = 1e-12;

bool eq16_in_domain(double b);
bool eq22_in_domain(double p, double b);

/// The reference plotting box 0 < p < 0.5, 2p^2 - p < b < 0, strictly inside
/// the positivity region; figure presets clip to it.
bool eq22_in_printed_box(double p, double b);

DensityMatrix build_eq16(Eq16Param param);
DensityMatrix build_eq22(Eq22Param param);

/// |1-2p| + |p| + |p/2 - sqrt(4b^2+p^2)/2| + |p/2 + sqrt(4b^2+p^2)/2|,
/// evaluated term by term. On the domain it equals 1 - p + sqrt(p^2 + 4b^2).
double closed_form_negativity_eq22(Eq22Param param);

/// max{0, sqrt(p + b^2 - 2p^2 - 2b s) - sqrt(p + b^2 - 2p^2 + 2b s)} with
/// s = sqrt(p - 2p^2), evaluated term by term; equals 2|b| for b <= 0 on the
/// domain. Throws NegativeRadicand when a radicand drops below -1e-12.
double closed_form_concurrence_eq22(Eq22Param param);

/// Uniform axis with endpoints included; count == 1 collapses to {min}.
struct GridAxis {
    double min = 0.0;
    double max = 0.0;
    int count = 0;
};
std::vector<double> grid_points(const GridAxis& axis);

struct SweepRow {
    std::array<double, 2> params{};  // [b] for Eq16, [p, b] for Eq22
    int param_count = 0;
    bool skipped = false;  // out-of-domain grid point
    double iq = 0.0;
    double negativity_sum = 0.0;
    double concurrence = 0.0;
};

struct SweepTable {
    Family family = Family::Eq16;
    std::vector<SweepRow> rows;  // lexicographic in the axis values
};

/// Cartesian sweep over explicit axis point lists (1 axis for Eq16, 2 for
/// Eq22, outer axis first). Out-of-domain points become skipped rows. The
/// unsuffixed version may compute rows in parallel; _serial is the reference
/// loop. Outputs are identical.
SweepTable sweep(Family family, const std::vector<std::vector<double>>& axes);
SweepTable sweep_serial(Family family, const std::vector<std::vector<double>>& axes);

}  // namespace qutrit
