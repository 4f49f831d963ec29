#include "qutrit/families.hpp"

#include <cmath>

#include "qutrit/entanglement.hpp"
#include "qutrit/entropy.hpp"
#include "qutrit/parallel.hpp"

namespace qutrit {

bool eq16_in_domain(double b) {
    return b >= -1.0 - kDomainSlack && b <= 0.5 + kDomainSlack;
}

bool eq22_in_domain(double p, double b) {
    return p >= -kDomainSlack && 1.0 - 2.0 * p >= -kDomainSlack &&
           b * b <= p * (1.0 - 2.0 * p) + kDomainSlack;
}

bool eq22_in_printed_box(double p, double b) {
    return p > 0.0 && p < 0.5 && b > 2.0 * p * p - p && b < 0.0;
}

DensityMatrix build_eq16(Eq16Param param) {
    if (!eq16_in_domain(param.b))
        throw DomainError("parameter b = " + std::to_string(param.b) +
                          " outside [-1, 1/2]");
    const double third = 1.0 / 3.0;
    return validate(ComplexMatrix::diagonal({(1.0 + param.b) * third,
                                             (1.0 + param.b) * third,
                                             (1.0 - 2.0 * param.b) * third}));
}

DensityMatrix build_eq22(Eq22Param param) {
    const auto [p, b] = param;
    if (p < -kDomainSlack)
        throw DomainError("positivity requires p >= 0, got p = " + std::to_string(p));
    if (1.0 - 2.0 * p < -kDomainSlack)
        throw DomainError("positivity requires 1 - 2p >= 0, got p = " + std::to_string(p));
    if (b * b > p * (1.0 - 2.0 * p) + kDomainSlack)
        throw DomainError("positivity requires b^2 <= p(1 - 2p): b^2 = " +
                          std::to_string(b * b) + ", p(1 - 2p) = " +
                          std::to_string(p * (1.0 - 2.0 * p)));
    ComplexMatrix m(3);
    m(0, 0) = p;
    m(1, 1) = 1.0 - 2.0 * p;
    m(1, 2) = b;
    m(2, 1) = b;
    m(2, 2) = p;
    return validate(m);
}

double closed_form_negativity_eq22(Eq22Param param) {
    const auto [p, b] = param;
    if (!eq22_in_domain(p, b))
        throw DomainError("(p, b) outside the positivity domain");
    const double root = std::sqrt(4.0 * b * b + p * p);
    return std::abs(1.0 - 2.0 * p) + std::abs(p) + std::abs(p / 2.0 - root / 2.0) +
           std::abs(p / 2.0 + root / 2.0);
}

double closed_form_concurrence_eq22(Eq22Param param) {
    const auto [p, b] = param;
    if (!eq22_in_domain(p, b))
        throw DomainError("(p, b) outside the positivity domain");
    const double inner = p - 2.0 * p * p;
    if (inner < -kDomainSlack) throw NegativeRadicand(inner);
    const double s = std::sqrt(std::max(inner, 0.0));
    const double minus = p + b * b - 2.0 * p * p - 2.0 * b * s;
    const double plus = p + b * b - 2.0 * p * p + 2.0 * b * s;
    if (minus < -kDomainSlack) throw NegativeRadicand(minus);
    if (plus < -kDomainSlack) throw NegativeRadicand(plus);
    return std::max(0.0, std::sqrt(std::max(minus, 0.0)) - std::sqrt(std::max(plus, 0.0)));
}

std::vector<double> grid_points(const GridAxis& axis) {
    if (axis.count < 1) throw EmptyGrid("grid axis needs at least one point");
    std::vector<double> pts;
    pts.reserve(static_cast<size_t>(axis.count));
    if (axis.count == 1) {
        pts.push_back(axis.min);
        return pts;
    }
    const double step = (axis.max - axis.min) / (axis.count - 1);
    for (int i = 0; i < axis.count; ++i) pts.push_back(axis.min + i * step);
    return pts;
}

namespace {

SweepRow compute_row(Family family, double x, double y) {
    SweepRow row;
    if (family == Family::Eq16) {
        row.params = {x, 0.0};
        row.param_count = 1;
        if (!eq16_in_domain(x)) {
            row.skipped = true;
            return row;
        }
        const DensityMatrix state = build_eq16({x});
        row.iq = subadditivity_report(state, EntropyRoute::PaddedQutrit).iq;
        const EntanglementReport ent = entanglement_report(state);
        row.negativity_sum = ent.negativity_sum;
        row.concurrence = ent.concurrence;
    } else {
        row.params = {x, y};
        row.param_count = 2;
        if (!eq22_in_domain(x, y)) {
            row.skipped = true;
            return row;
        }
        const DensityMatrix state = build_eq22({x, y});
        row.iq = subadditivity_report(state, EntropyRoute::PaddedQutrit).iq;
        const EntanglementReport ent = entanglement_report(state);
        row.negativity_sum = ent.negativity_sum;
        row.concurrence = ent.concurrence;
    }
    return row;
}

template <class ForEach>
SweepTable run_sweep(Family family, const std::vector<std::vector<double>>& axes,
                     ForEach&& for_each) {
    const size_t expected_axes = family == Family::Eq16 ? 1 : 2;
    if (axes.size() != expected_axes)
        throw DomainError("family expects " + std::to_string(expected_axes) +
                          " grid axes, got " + std::to_string(axes.size()));
    for (const auto& axis : axes)
        if (axis.empty()) throw EmptyGrid("grid axis has no points");

    const size_t inner = expected_axes == 2 ? axes[1].size() : 1;
    const size_t total = axes[0].size() * inner;
    SweepTable table;
    table.family = family;
    table.rows.resize(total);
    for_each(total, [&](size_t k) {
        const double x = axes[0][k / inner];
        const double y = expected_axes == 2 ? axes[1][k % inner] : 0.0;
        table.rows[k] = compute_row(family, x, y);
    });
    return table;
}

}  // namespace

SweepTable sweep(Family family, const std::vector<std::vector<double>>& axes) {
    return run_sweep(family, axes,
                     [](size_t n, auto&& body) { parallel_for(n, body); });
}

SweepTable sweep_serial(Family family, const std::vector<std::vector<double>>& axes) {
    return run_sweep(family, axes,
                     [](size_t n, auto&& body) { serial_for(n, body); });
}

}  // namespace qutrit
