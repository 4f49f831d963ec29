#include "qutrit/entropy.hpp"

#include <cmath>

#include "qutrit/families.hpp"
#include "qutrit/parallel.hpp"

namespace qutrit {

const char* to_string(EntropyRoute route) {
    switch (route) {
        case EntropyRoute::TwoQubit: return "two-qubit";
        case EntropyRoute::PaddedQutrit: return "padded-qutrit";
        case EntropyRoute::Padded6x6: return "padded-6x6";
    }
    return "?";
}

double von_neumann_entropy(const DensityMatrix& m) {
    const Spectrum spec = hermitian_spectrum(m.matrix());
    double s = 0.0;
    for (double lam : spec.values) {
        if (lam < 1e-15) continue;  // 0 ln 0 = 0; padded states sit on the boundary
        if (lam > 1.0) lam = 1.0;
        s -= lam * std::log(lam);
    }
    return s < 0.0 ? 0.0 : s;
}

EntropyReport subadditivity_report(const DensityMatrix& m, EntropyRoute route) {
    EntropyReport rep;
    rep.route = route;
    switch (route) {
        case EntropyRoute::TwoQubit: {
            if (m.dim() != 4)
                throw DimensionMismatch("two-qubit route expects a 4x4 state");
            if (!m.split()) throw NoSplit("two-qubit route requires the (2,2) split");
            if (m.split()->a != 2 || m.split()->b != 2)
                throw DimensionMismatch("two-qubit route requires a (2,2) split");
            rep.s1 = von_neumann_entropy(partial_trace(m, Subsystem::A));
            rep.s2 = von_neumann_entropy(partial_trace(m, Subsystem::B));
            rep.s12 = von_neumann_entropy(m);
            break;
        }
        case EntropyRoute::PaddedQutrit: {
            if (m.dim() != 3)
                throw DimensionMismatch("padded-qutrit route expects a 3x3 state");
            const PaddedState padded = pad_qutrit_to_4(m);
            const auto [r1, r2] = artificial_qubit_reductions(padded);
            rep.s1 = von_neumann_entropy(r1);
            rep.s2 = von_neumann_entropy(r2);
            rep.s12 = von_neumann_entropy(padded.padded);
            break;
        }
        case EntropyRoute::Padded6x6: {
            if (m.dim() != 4)
                throw DimensionMismatch("padded-6x6 route expects a 4x4 state");
            const PaddedState padded = pad_4_to_6(m);
            rep.s1 = von_neumann_entropy(partial_trace(padded.padded, Subsystem::A));
            rep.s2 = von_neumann_entropy(partial_trace(padded.padded, Subsystem::B));
            rep.s12 = von_neumann_entropy(padded.padded);
            break;
        }
    }
    rep.iq = rep.s1 + rep.s2 - rep.s12;
    return rep;
}

namespace {

double iq_at(double b) {
    return subadditivity_report(build_eq16({b}), EntropyRoute::PaddedQutrit).iq;
}

}  // namespace

std::vector<std::pair<double, double>> iq_curve_eq16(std::span<const double> b_grid) {
    for (double b : b_grid)
        if (!eq16_in_domain(b))
            throw DomainError("family parameter b = " + std::to_string(b) +
                              " outside [-1, 1/2]");
    std::vector<std::pair<double, double>> out(b_grid.size());
    parallel_for(b_grid.size(), [&](size_t i) { out[i] = {b_grid[i], iq_at(b_grid[i])}; });
    return out;
}

std::vector<std::pair<double, double>> iq_curve_eq16_serial(std::span<const double> b_grid) {
    for (double b : b_grid)
        if (!eq16_in_domain(b))
            throw DomainError("family parameter b = " + std::to_string(b) +
                              " outside [-1, 1/2]");
    std::vector<std::pair<double, double>> out(b_grid.size());
    serial_for(b_grid.size(), [&](size_t i) { out[i] = {b_grid[i], iq_at(b_grid[i])}; });
    return out;
}

}  // namespace qutrit
