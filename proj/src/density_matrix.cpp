#include "qutrit/density_matrix.hpp"

#include <cmath>
#include <limits>
#include <random>

namespace qutrit {

DensityMatrix DensityMatrix::with_split(int a, int b) const {
    if (a < 1 || b < 1 || a * b != dim())
        throw DimensionMismatch("split " + std::to_string(a) + "x" + std::to_string(b) +
                                " does not factor dimension " + std::to_string(dim()));
    DensityMatrix copy = *this;
    copy.split_ = Split{a, b};
    return copy;
}

ValidationReport check_state(const ComplexMatrix& m, const ValidationTolerances& tol) {
    ValidationReport rep;
    rep.tolerances = tol;
    rep.hermitian_deviation = hermiticity_deviation(m);
    rep.hermitian_bound = tol.hermitian_rel * std::max(m.max_abs(), 1e-300);
    rep.hermitian_ok = rep.hermitian_deviation <= rep.hermitian_bound;
    rep.trace_deviation = std::abs(trace(m) - Complex(1.0, 0.0));
    rep.trace_ok = rep.trace_deviation <= tol.trace;
    if (rep.hermitian_ok) {
        rep.min_eigenvalue = hermitian_spectrum(m).min();
        rep.psd_ok = rep.min_eigenvalue >= -tol.psd;
    } else {
        // No Hermitian spectrum to measure; report the PSD check as failed.
        rep.min_eigenvalue = std::numeric_limits<double>::quiet_NaN();
        rep.psd_ok = false;
    }
    return rep;
}

DensityMatrix validate(const ComplexMatrix& m, const ValidationTolerances& tol) {
    if (m.dim() < 2 || m.dim() > kMaxDim)
        throw DimensionMismatch("density matrix dimension must be in [2, 8], got " +
                                std::to_string(m.dim()));
    const ValidationReport rep = check_state(m, tol);
    if (!rep.hermitian_ok) throw NotHermitian(rep.hermitian_deviation, rep.hermitian_bound);
    if (!rep.trace_ok) throw TraceNotOne(rep.trace_deviation);
    if (!rep.psd_ok) throw NotPSD(rep.min_eigenvalue);
    return DensityMatrix(m);
}

PaddedState pad_qutrit_to_4(const DensityMatrix& q) {
    if (q.dim() != 3)
        throw DimensionMismatch("corner padding expects a 3x3 state, got " +
                                std::to_string(q.dim()));
    ComplexMatrix p(4);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) p(i, j) = q(i, j);
    return PaddedState{q, validate(p).with_split(2, 2), {0, 1, 2}};
}

PaddedState pad_4_to_6(const DensityMatrix& m) {
    if (m.dim() != 4)
        throw DimensionMismatch("center padding expects a 4x4 state, got " +
                                std::to_string(m.dim()));
    ComplexMatrix p(6);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) p(i + 1, j + 1) = m(i, j);
    return PaddedState{m, validate(p).with_split(2, 3), {1, 2, 3, 4}};
}

DensityMatrix partial_trace(const DensityMatrix& m, Subsystem keep) {
    if (!m.split()) throw NoSplit("partial trace requires a bipartite split");
    const auto [da, db] = *m.split();
    const int dkeep = keep == Subsystem::A ? da : db;
    const int dsum = keep == Subsystem::A ? db : da;
    ComplexMatrix r(dkeep);
    for (int i = 0; i < dkeep; ++i)
        for (int j = 0; j < dkeep; ++j) {
            Complex s = 0.0;
            for (int k = 0; k < dsum; ++k) {
                if (keep == Subsystem::A)
                    s += m(i * db + k, j * db + k);
                else
                    s += m(k * db + i, k * db + j);
            }
            r(i, j) = s;
        }
    return validate(r);
}

ComplexMatrix partial_transpose(const ComplexMatrix& m, Split split, Subsystem side) {
    const auto [da, db] = split;
    if (da < 1 || db < 1 || da * db != m.dim())
        throw DimensionMismatch("split " + std::to_string(da) + "x" + std::to_string(db) +
                                " does not factor dimension " + std::to_string(m.dim()));
    ComplexMatrix r(m.dim());
    for (int ia = 0; ia < da; ++ia)
        for (int ib = 0; ib < db; ++ib)
            for (int ja = 0; ja < da; ++ja)
                for (int jb = 0; jb < db; ++jb) {
                    if (side == Subsystem::B)
                        r(ia * db + ib, ja * db + jb) = m(ia * db + jb, ja * db + ib);
                    else
                        r(ia * db + ib, ja * db + jb) = m(ja * db + ib, ia * db + jb);
                }
    return r;
}

ComplexMatrix partial_transpose(const DensityMatrix& m, Subsystem side) {
    if (!m.split()) throw NoSplit("partial transpose requires a bipartite split");
    return partial_transpose(m.matrix(), *m.split(), side);
}

std::pair<DensityMatrix, DensityMatrix> artificial_qubit_reductions(const PaddedState& p) {
    if (p.padded.dim() != 4 || p.original.dim() != 3)
        throw DimensionMismatch("artificial qubit reductions expect a 3->4 padding");
    const DensityMatrix& q = p.original;
    ComplexMatrix r1(2), r2(2);
    r1(0, 0) = q(0, 0) + q(1, 1);
    r1(0, 1) = q(0, 2);
    r1(1, 0) = q(2, 0);
    r1(1, 1) = q(2, 2);
    r2(0, 0) = q(0, 0) + q(2, 2);
    r2(0, 1) = q(0, 1);
    r2(1, 0) = q(1, 0);
    r2(1, 1) = q(1, 1);
    return {validate(r1), validate(r2)};
}

namespace {

// Box-Muller over mt19937_64; self-contained so the stream does not depend
// on the standard library's distribution internals.
class NormalSampler {
public:
    explicit NormalSampler(std::uint64_t seed) : eng_(seed) {}

    double operator()() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        const double u1 = 1.0 - uniform01();  // (0, 1]
        const double u2 = uniform01();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double t = 2.0 * M_PI * u2;
        spare_ = r * std::sin(t);
        has_spare_ = true;
        return r * std::cos(t);
    }

private:
    double uniform01() {
        return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
    }

    std::mt19937_64 eng_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace

DensityMatrix random_density(int dim, std::uint64_t seed) {
    if (dim < 2 || dim > kMaxDim)
        throw DimensionMismatch("random state dimension must be in [2, 8], got " +
                                std::to_string(dim));
    NormalSampler normal(seed);
    ComplexMatrix g(dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) {
            const double re = normal();
            const double im = normal();
            g(i, j) = Complex(re, im);
        }
    ComplexMatrix rho = g * adjoint(g);
    const double t = trace(rho).real();
    rho *= Complex(1.0 / t, 0.0);
    return validate(rho);
}

const std::array<SpinPair, 4>& two_qubit_index_map() {
    static const std::array<SpinPair, 4> map{{{+1, +1}, {+1, -1}, {-1, +1}, {-1, -1}}};
    return map;
}

int spin_pair_to_index(SpinPair p) {
    const auto& map = two_qubit_index_map();
    for (int k = 0; k < 4; ++k)
        if (map[static_cast<size_t>(k)].first == p.first &&
            map[static_cast<size_t>(k)].second == p.second)
            return k;
    throw DomainError("spin projections must be +1 or -1 (half-quanta)");
}

}  // namespace qutrit
