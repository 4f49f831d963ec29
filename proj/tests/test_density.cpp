#include <doctest.h>

#include <cmath>
#include <random>

#include "qutrit/density_matrix.hpp"
#include "qutrit/families.hpp"
#include "test_support.hpp"

using namespace qutrit;

TEST_SUITE_BEGIN("density");

TEST_CASE("maximally mixed qutrit validates") {
    const ComplexMatrix m = Complex(1.0 / 3.0, 0.0) * ComplexMatrix::identity(3);
    CHECK_NOTHROW(validate(m));
}

TEST_CASE("diagonal family outside its domain fails PSD with the right magnitude") {
    const double b = 0.6;
    const ComplexMatrix m = ComplexMatrix::diagonal(
        {(1.0 + b) / 3.0, (1.0 + b) / 3.0, (1.0 - 2.0 * b) / 3.0});
    try {
        validate(m);
        FAIL("expected NotPSD");
    } catch (const NotPSD& e) {
        CHECK(std::abs(e.min_eigenvalue - (1.0 - 2.0 * b) / 3.0) <= 1e-12);
    }
}

TEST_CASE("two-parameter family state validates when the 2x2 block is PSD") {
    // Oracle: eigenvalues of [[1-2p, b], [b, p]] by the quadratic formula.
    const double p = 0.4, b = -0.2;
    const double half_sum = (1.0 - 2.0 * p + p) / 2.0;
    const double disc = std::sqrt(std::pow((1.0 - 3.0 * p) / 2.0, 2) + b * b);
    CHECK(half_sum - disc >= 0.0);  // block PSD, so the state is PSD
    ComplexMatrix m(3);
    m(0, 0) = p;
    m(1, 1) = 1.0 - 2.0 * p;
    m(1, 2) = b;
    m(2, 1) = b;
    m(2, 2) = p;
    CHECK_NOTHROW(validate(m));
}

TEST_CASE("validation rejects bad trace and non-hermitian input") {
    CHECK_THROWS_AS(validate(ComplexMatrix::identity(3)), TraceNotOne);
    ComplexMatrix skew(2);
    skew(0, 0) = 0.5;
    skew(1, 1) = 0.5;
    skew(0, 1) = Complex(0.1, 0.0);
    skew(1, 0) = Complex(0.2, 0.0);
    CHECK_THROWS_AS(validate(skew), NotHermitian);
}

TEST_CASE("corner padding places the qutrit in the top-left block") {
    const auto pure = validate(ComplexMatrix::diagonal({1.0, 0.0, 0.0}));
    const auto padded = pad_qutrit_to_4(pure);
    CHECK(max_abs_diff(padded.padded.matrix(),
                       ComplexMatrix::diagonal({1.0, 0.0, 0.0, 0.0})) == 0.0);
    CHECK(padded.placement == std::vector<int>{0, 1, 2});

    const auto mixed = pad_qutrit_to_4(build_eq16({0.0}));
    CHECK(max_abs_diff(mixed.padded.matrix(),
                       ComplexMatrix::diagonal({1.0 / 3, 1.0 / 3, 1.0 / 3, 0.0})) <= 1e-15);
}

TEST_CASE("corner padding of the two-parameter family, entry by entry") {
    const auto padded = pad_qutrit_to_4(build_eq22({0.4, -0.2})).padded;
    CHECK(padded(0, 0) == Complex(0.4, 0.0));
    CHECK(std::abs(padded(1, 1) - Complex(0.2, 0.0)) <= 1e-15);  // 1 - 2p rounding
    CHECK(padded(1, 2) == Complex(-0.2, 0.0));
    CHECK(padded(2, 1) == Complex(-0.2, 0.0));
    CHECK(padded(2, 2) == Complex(0.4, 0.0));
    for (int k = 0; k < 4; ++k) {
        CHECK(padded(3, k) == Complex(0.0, 0.0));
        CHECK(padded(k, 3) == Complex(0.0, 0.0));
    }
}

TEST_CASE("padding preserves the spectrum plus zeros") {
    for (std::uint64_t seed = 1; seed <= 25; ++seed) {
        const DensityMatrix q = random_density(3, seed);
        const auto padded = pad_qutrit_to_4(q);
        const auto sq = hermitian_spectrum(q.matrix());
        const auto sp = hermitian_spectrum(padded.padded.matrix());
        REQUIRE(sp.values.size() == 4);
        for (size_t k = 0; k < 3; ++k)
            CHECK(std::abs(sp.values[k] - sq.values[k]) <= 1e-10);
        CHECK(std::abs(sp.values[3]) <= 1e-10);
    }
}

TEST_CASE("center padding to 6x6") {
    const DensityMatrix id4 = validate(Complex(0.25, 0.0) * ComplexMatrix::identity(4));
    const auto padded = pad_4_to_6(id4);
    CHECK(max_abs_diff(padded.padded.matrix(),
                       ComplexMatrix::diagonal({0.0, 0.25, 0.25, 0.25, 0.25, 0.0})) == 0.0);

    const DensityMatrix generic = random_density(4, 9);
    const auto p = pad_4_to_6(generic);
    CHECK(p.padded(1, 1) == generic(0, 0));
    CHECK(p.padded(4, 4) == generic(3, 3));
    for (int k = 0; k < 6; ++k) {
        CHECK(p.padded(0, k) == Complex(0.0, 0.0));
        CHECK(p.padded(5, k) == Complex(0.0, 0.0));
    }
    const auto s4 = hermitian_spectrum(generic.matrix());
    const auto s6 = hermitian_spectrum(p.padded.matrix());
    for (size_t k = 0; k < 4; ++k) CHECK(std::abs(s6.values[k] - s4.values[k]) <= 1e-10);
    CHECK(std::abs(s6.values[4]) <= 1e-12);
    CHECK(std::abs(s6.values[5]) <= 1e-12);
}

TEST_CASE("partial trace of a product state returns the factors") {
    const DensityMatrix a = random_density(2, 11);
    const DensityMatrix b = random_density(2, 12);
    const DensityMatrix prod = validate(kron(a.matrix(), b.matrix())).with_split(2, 2);
    CHECK(max_abs_diff(partial_trace(prod, Subsystem::A).matrix(), a.matrix()) <= 1e-12);
    CHECK(max_abs_diff(partial_trace(prod, Subsystem::B).matrix(), b.matrix()) <= 1e-12);
}

TEST_CASE("partial trace of a Bell state is maximally mixed") {
    ComplexMatrix bell(4);
    bell(0, 0) = bell(0, 3) = bell(3, 0) = bell(3, 3) = 0.5;
    const DensityMatrix state = validate(bell).with_split(2, 2);
    const ComplexMatrix half = Complex(0.5, 0.0) * ComplexMatrix::identity(2);
    CHECK(max_abs_diff(partial_trace(state, Subsystem::A).matrix(), half) <= 1e-14);
    CHECK(max_abs_diff(partial_trace(state, Subsystem::B).matrix(), half) <= 1e-14);
}

TEST_CASE("partial trace of the padded diagonal family") {
    const auto padded = pad_qutrit_to_4(build_eq16({0.0})).padded;
    ComplexMatrix expected(2);
    expected(0, 0) = 2.0 / 3.0;
    expected(1, 1) = 1.0 / 3.0;
    CHECK(max_abs_diff(partial_trace(padded, Subsystem::A).matrix(), expected) <= 1e-15);
}

TEST_CASE("partial trace requires a split") {
    const DensityMatrix q = random_density(4, 3);
    CHECK_THROWS_AS(partial_trace(q, Subsystem::A), NoSplit);
}

TEST_CASE("artificial qubit reductions at family boundary points") {
    {
        const auto padded = pad_qutrit_to_4(build_eq16({0.5}));
        const auto [r1, r2] = artificial_qubit_reductions(padded);
        CHECK(max_abs_diff(r1.matrix(), ComplexMatrix::diagonal({1.0, 0.0})) <= 1e-15);
        CHECK(max_abs_diff(r2.matrix(), ComplexMatrix::diagonal({0.5, 0.5})) <= 1e-15);
    }
    {
        const auto padded = pad_qutrit_to_4(build_eq16({0.0}));
        const auto [r1, r2] = artificial_qubit_reductions(padded);
        const auto expected = ComplexMatrix::diagonal({2.0 / 3.0, 1.0 / 3.0});
        CHECK(max_abs_diff(r1.matrix(), expected) <= 1e-15);
        CHECK(max_abs_diff(r2.matrix(), expected) <= 1e-15);
    }
}

TEST_CASE("reductions preserve trace and agree with the generic partial trace") {
    for (std::uint64_t seed = 20; seed < 60; ++seed) {
        const auto padded = pad_qutrit_to_4(random_density(3, seed));
        const auto [r1, r2] = artificial_qubit_reductions(padded);
        CHECK(std::abs(trace(r1.matrix()).real() - 1.0) <= 1e-12);
        CHECK(std::abs(trace(r2.matrix()).real() - 1.0) <= 1e-12);
        // Both routes are exact index sums.
        CHECK(max_abs_diff(r1.matrix(), partial_trace(padded.padded, Subsystem::A).matrix()) <=
              1e-14);
        CHECK(max_abs_diff(r2.matrix(), partial_trace(padded.padded, Subsystem::B).matrix()) <=
              1e-14);
    }
}

TEST_CASE("center-padded reductions match the displayed 2x2 and 3x3 forms") {
    for (std::uint64_t seed = 61; seed < 81; ++seed) {
        const DensityMatrix m = random_density(4, seed);
        const auto padded = pad_4_to_6(m);
        ComplexMatrix r1(2);
        r1(0, 0) = m(0, 0) + m(1, 1);
        r1(0, 1) = m(0, 3);
        r1(1, 0) = m(3, 0);
        r1(1, 1) = m(2, 2) + m(3, 3);
        ComplexMatrix r2(3);
        r2(0, 0) = m(2, 2);
        r2(0, 1) = m(2, 3);
        r2(1, 0) = m(3, 2);
        r2(1, 1) = m(0, 0) + m(3, 3);
        r2(1, 2) = m(0, 1);
        r2(2, 1) = m(1, 0);
        r2(2, 2) = m(1, 1);
        CHECK(max_abs_diff(partial_trace(padded.padded, Subsystem::A).matrix(), r1) == 0.0);
        CHECK(max_abs_diff(partial_trace(padded.padded, Subsystem::B).matrix(), r2) == 0.0);
    }
}

TEST_CASE("partial trace output always validates") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const DensityMatrix m = random_density(6, seed).with_split(2, 3);
        CHECK_NOTHROW(partial_trace(m, Subsystem::A));
        CHECK_NOTHROW(partial_trace(m, Subsystem::B));
    }
}

TEST_CASE("partial transpose is an involution that keeps trace and hermiticity") {
    for (std::uint64_t seed = 5; seed <= 25; ++seed) {
        const DensityMatrix m = random_density(4, seed).with_split(2, 2);
        const ComplexMatrix pt = partial_transpose(m, Subsystem::B);
        CHECK(hermiticity_deviation(pt) == 0.0);
        CHECK(std::abs(trace(pt).real() - 1.0) <= 1e-12);
        // The transposed matrix of an entangled state is indefinite, so the
        // second application goes through the raw overload.
        const ComplexMatrix back = partial_transpose(pt, Split{2, 2}, Subsystem::B);
        CHECK(max_abs_diff(back, m.matrix()) == 0.0);
    }
}

TEST_CASE("partial transpose of the padded two-parameter family") {
    const double p = 0.4, b = -0.2;
    const auto padded = pad_qutrit_to_4(build_eq22({p, b})).padded;
    const ComplexMatrix pt = partial_transpose(padded, Subsystem::B);
    ComplexMatrix expected(4);
    expected(0, 0) = p;
    expected(0, 3) = b;
    expected(1, 1) = 1.0 - 2.0 * p;
    expected(2, 2) = p;
    expected(3, 0) = b;
    CHECK(max_abs_diff(pt, expected) <= 1e-15);
}

TEST_CASE("partial transpose equals the displayed corner-padded pattern") {
    // Regression for the special-case display: entry (1,2)=r21, (1,4)=r23,
    // (4,1)=r32, fourth column otherwise zero.
    for (std::uint64_t seed = 30; seed < 50; ++seed) {
        const DensityMatrix q = random_density(3, seed);
        const ComplexMatrix pt =
            partial_transpose(pad_qutrit_to_4(q).padded, Subsystem::B);
        ComplexMatrix expected(4);
        expected(0, 0) = q(0, 0);
        expected(0, 1) = q(1, 0);
        expected(0, 2) = q(0, 2);
        expected(0, 3) = q(1, 2);
        expected(1, 0) = q(0, 1);
        expected(1, 1) = q(1, 1);
        expected(2, 0) = q(2, 0);
        expected(2, 2) = q(2, 2);
        expected(3, 0) = q(2, 1);
        CHECK(max_abs_diff(pt, expected) == 0.0);
    }
}

TEST_CASE("partial transpose of a product state keeps the spectrum nonnegative") {
    const DensityMatrix a = random_density(2, 41);
    const DensityMatrix b = random_density(2, 42);
    const DensityMatrix prod = validate(kron(a.matrix(), b.matrix())).with_split(2, 2);
    const auto before = hermitian_spectrum(prod.matrix());
    const auto after = hermitian_spectrum(partial_transpose(prod, Subsystem::B));
    for (size_t k = 0; k < 4; ++k) {
        CHECK(std::abs(before.values[k] - after.values[k]) <= 1e-10);
        CHECK(after.values[k] >= -1e-12);
    }
}

TEST_CASE("random states are deterministic per seed and always valid") {
    const DensityMatrix a = random_density(3, 1234);
    const DensityMatrix b = random_density(3, 1234);
    CHECK(max_abs_diff(a.matrix(), b.matrix()) == 0.0);
    const DensityMatrix c = random_density(3, 1235);
    CHECK(max_abs_diff(a.matrix(), c.matrix()) > 0.0);
}

TEST_CASE("random state sweep stays PSD") {
    // Reduced-size version of the acceptance sweep; construction makes
    // negative eigenvalues impossible, validate() enforces it.
    for (std::uint64_t seed = 0; seed < 2000; ++seed) {
        const DensityMatrix m = random_density(4, seed);
        CHECK(hermitian_spectrum(m.matrix()).min() >= 0.0);
    }
}

TEST_CASE("index map is the frozen bijection") {
    const auto& map = two_qubit_index_map();
    CHECK(map[0].first == 1);
    CHECK(map[0].second == 1);
    CHECK(map[1].first == 1);
    CHECK(map[1].second == -1);
    CHECK(map[2].first == -1);
    CHECK(map[2].second == 1);
    CHECK(map[3].first == -1);
    CHECK(map[3].second == -1);
    for (int k = 0; k < 4; ++k) CHECK(spin_pair_to_index(map[static_cast<size_t>(k)]) == k);
}

TEST_SUITE_END();
