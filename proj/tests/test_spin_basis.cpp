#include <doctest.h>

#include <cmath>

#include "qutrit/entanglement.hpp"
#include "qutrit/spin_basis.hpp"
#include "test_support.hpp"

using namespace qutrit;

TEST_SUITE_BEGIN("spin_basis");

TEST_CASE("coupling matrix is unitary, real-symmetric and self-inverse") {
    const ComplexMatrix& c = coupling_basis_matrix();
    CHECK(max_abs_diff(c * adjoint(c), ComplexMatrix::identity(4)) <= 1e-12);
    CHECK(max_abs_diff(c, transpose(c)) == 0.0);
    CHECK(max_abs_diff(c, conjugate(c)) == 0.0);
    CHECK(max_abs_diff(c * c, ComplexMatrix::identity(4)) <= 1e-12);
}

TEST_CASE("frozen label order") {
    const auto& labels = spin_basis_labels();
    CHECK(labels[0].j == 1);
    CHECK(labels[0].m == 1);
    CHECK(labels[1].j == 1);
    CHECK(labels[1].m == 0);
    CHECK(labels[2].j == 1);
    CHECK(labels[2].m == -1);
    CHECK(labels[3].j == 0);
    CHECK(labels[3].m == 0);
    for (const auto& l : labels) CHECK(std::abs(l.m) <= l.j);
}

TEST_CASE("maximally mixed state is a fixed point of the conversion") {
    const DensityMatrix id4 = validate(Complex(0.25, 0.0) * ComplexMatrix::identity(4));
    CHECK(max_abs_diff(to_g_basis(id4).matrix(), id4.matrix()) <= 1e-15);
}

TEST_CASE("the symmetric Bell-like state maps to the second basis slot") {
    ComplexMatrix m(4);
    m(1, 1) = m(1, 2) = m(2, 1) = m(2, 2) = 0.5;
    const DensityMatrix g = to_g_basis(validate(m));
    ComplexMatrix expected(4);
    expected(1, 1) = 1.0;
    CHECK(max_abs_diff(g.matrix(), expected) <= 1e-12);
}

TEST_CASE("conversion preserves trace, spectrum and entropy") {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const DensityMatrix m = random_density(4, 2000 + seed);
        const DensityMatrix g = to_g_basis(m);
        CHECK(std::abs(trace(g.matrix()).real() - 1.0) <= 1e-12);
        const auto se = hermitian_spectrum(m.matrix());
        const auto sg = hermitian_spectrum(g.matrix());
        for (size_t k = 0; k < 4; ++k) CHECK(std::abs(se.values[k] - sg.values[k]) <= 1e-10);
        // Round trip comes home.
        CHECK(max_abs_diff(to_e_basis(g).matrix(), m.matrix()) <= 1e-13);
    }
}

TEST_CASE("truncation leaves triplet-supported states untouched") {
    ComplexMatrix m(4);
    m(0, 0) = 0.5;
    m(1, 1) = 0.3;
    m(2, 2) = 0.2;
    m(0, 2) = Complex(0.1, 0.05);
    m(2, 0) = Complex(0.1, -0.05);
    const DensityMatrix g = validate(m);
    const auto cut = symmetric_truncation(g, false);
    CHECK(cut.singlet_weight == 0.0);
    CHECK(max_abs_diff(cut.matrix, m) == 0.0);
}

TEST_CASE("truncating the maximally mixed state") {
    const DensityMatrix id4 = validate(Complex(0.25, 0.0) * ComplexMatrix::identity(4));
    const auto raw = symmetric_truncation(id4, false);
    CHECK(std::abs(raw.singlet_weight - 0.25) <= 1e-15);
    CHECK(std::abs(trace(raw.matrix).real() - 0.75) <= 1e-15);

    const auto renorm = symmetric_truncation(id4, true);
    CHECK(max_abs_diff(renorm.matrix,
                       ComplexMatrix::diagonal({1.0 / 3, 1.0 / 3, 1.0 / 3, 0.0})) <= 1e-12);
}

TEST_CASE("pure singlet cannot be renormalized") {
    ComplexMatrix m(4);
    m(3, 3) = 1.0;
    CHECK_THROWS_AS(symmetric_truncation(validate(m), true), SingletDominant);
}

TEST_CASE("singlet weight is the trace deficit and stays in [0, 1]") {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const DensityMatrix m = random_density(4, 2100 + seed);
        const DensityMatrix g = to_g_basis(m);
        const auto cut = symmetric_truncation(g, false);
        CHECK(cut.singlet_weight >= 0.0);
        CHECK(cut.singlet_weight <= 1.0);
        CHECK(std::abs((1.0 - trace(cut.matrix).real()) - cut.singlet_weight) <= 1e-12);
    }
}

TEST_CASE("qutrit extraction from symmetric states") {
    {
        ComplexMatrix up(4);
        up(0, 0) = 1.0;  // |11> population only
        const DensityMatrix q = qutrit_from_symmetric(validate(up));
        CHECK(max_abs_diff(q.matrix(), ComplexMatrix::diagonal({1.0, 0.0, 0.0})) <= 1e-12);
    }
    {
        ComplexMatrix bell_like(4);
        bell_like(1, 1) = bell_like(1, 2) = bell_like(2, 1) = bell_like(2, 2) = 0.5;
        const DensityMatrix q = qutrit_from_symmetric(validate(bell_like));
        CHECK(max_abs_diff(q.matrix(), ComplexMatrix::diagonal({0.0, 1.0, 0.0})) <= 1e-12);
    }
    {
        const DensityMatrix id4 = validate(Complex(0.25, 0.0) * ComplexMatrix::identity(4));
        const DensityMatrix q = qutrit_from_symmetric(id4);
        CHECK(max_abs_diff(q.matrix(),
                           Complex(1.0 / 3.0, 0.0) * ComplexMatrix::identity(3)) <= 1e-12);
    }
}

TEST_CASE("entanglement is basis-relative") {
    // The pure state on the second coupled slot is a Bell state in the
    // product basis: concurrence 1 there, diagonal rank-one after conversion.
    ComplexMatrix m(4);
    m(1, 1) = m(1, 2) = m(2, 1) = m(2, 2) = 0.5;
    const DensityMatrix e_state = validate(m);
    CHECK(std::abs(concurrence(e_state).value - 1.0) <= 1e-9);

    const DensityMatrix g_state = to_g_basis(e_state);
    double off = 0.0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (i != j) off = std::max(off, std::abs(g_state(i, j)));
    CHECK(off <= 1e-12);
    CHECK(std::abs(g_state(1, 1).real() - 1.0) <= 1e-12);
}

TEST_SUITE_END();
