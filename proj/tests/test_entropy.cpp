#include <doctest.h>

#include <cmath>

#include "qutrit/entropy.hpp"
#include "qutrit/families.hpp"
#include "qutrit/state_sweep.hpp"
#include "test_support.hpp"

using namespace qutrit;

TEST_SUITE_BEGIN("entropy");

TEST_CASE("pure, maximally mixed and padded entropies") {
    CHECK(von_neumann_entropy(validate(ComplexMatrix::diagonal({1.0, 0.0, 0.0}))) == 0.0);

    const auto half = validate(Complex(0.5, 0.0) * ComplexMatrix::identity(2));
    CHECK(std::abs(von_neumann_entropy(half) - std::log(2.0)) <= 1e-12);

    const auto third = validate(Complex(1.0 / 3.0, 0.0) * ComplexMatrix::identity(3));
    CHECK(std::abs(von_neumann_entropy(third) - std::log(3.0)) <= 1e-12);
    // Padding adds a zero eigenvalue that contributes nothing.
    const auto padded = pad_qutrit_to_4(third).padded;
    CHECK(std::abs(von_neumann_entropy(padded) - std::log(3.0)) <= 1e-12);
}

TEST_CASE("subadditivity report on the diagonal family, hand-evaluated points") {
    {
        const auto rep = subadditivity_report(build_eq16({0.0}), EntropyRoute::PaddedQutrit);
        const double s_red = std::log(3.0) - (2.0 / 3.0) * std::log(2.0);  // diag(2/3, 1/3)
        CHECK(std::abs(rep.s1 - s_red) <= 1e-12);
        CHECK(std::abs(rep.s2 - s_red) <= 1e-12);
        CHECK(std::abs(rep.s12 - std::log(3.0)) <= 1e-12);
        CHECK(std::abs(rep.iq - (std::log(3.0) - 4.0 / 3.0 * std::log(2.0))) <= 1e-12);
        CHECK(std::abs(rep.iq - 0.174416) <= 1e-6);
        CHECK(rep.iq == rep.s1 + rep.s2 - rep.s12);  // defined as exactly this
    }
    {
        const auto rep = subadditivity_report(build_eq16({0.5}), EntropyRoute::PaddedQutrit);
        CHECK(std::abs(rep.s1) <= 1e-12);                  // diag(1, 0)
        CHECK(std::abs(rep.s2 - std::log(2.0)) <= 1e-12);  // diag(1/2, 1/2)
        CHECK(std::abs(rep.s12 - std::log(2.0)) <= 1e-12);
        CHECK(std::abs(rep.iq) <= 1e-12);
    }
    {
        // diag(0, 0, 1) up to the 3 * (1/3) rounding.
        const auto rep = subadditivity_report(build_eq16({-1.0}), EntropyRoute::PaddedQutrit);
        CHECK(std::abs(rep.s1) <= 1e-12);
        CHECK(std::abs(rep.s2) <= 1e-12);
        CHECK(std::abs(rep.s12) <= 1e-12);
        CHECK(std::abs(rep.iq) <= 1e-12);
    }
}

TEST_CASE("route preconditions") {
    const DensityMatrix q4 = random_density(4, 7);
    CHECK_THROWS_AS(subadditivity_report(q4, EntropyRoute::TwoQubit), NoSplit);
    CHECK_THROWS_AS(subadditivity_report(q4, EntropyRoute::PaddedQutrit), DimensionMismatch);
    CHECK_NOTHROW(subadditivity_report(q4.with_split(2, 2), EntropyRoute::TwoQubit));
    CHECK_NOTHROW(subadditivity_report(q4, EntropyRoute::Padded6x6));
}

TEST_CASE("subadditivity holds for seeded random qutrits") {
    CHECK(min_iq_padded_qutrit_serial(2000, 1000) >= -1e-9);
}

TEST_CASE("subadditivity holds on the 6x6 route for random 4x4 states") {
    CHECK(min_iq_padded_6x6_serial(2000, 5000) >= -1e-9);
}

TEST_CASE("parallel kernels match the serial reference exactly") {
    CHECK(min_iq_padded_qutrit(500, 1) == min_iq_padded_qutrit_serial(500, 1));
    CHECK(min_iq_padded_6x6(500, 2) == min_iq_padded_6x6_serial(500, 2));
}

TEST_CASE("entropy bounds and padding invariance on random states") {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const DensityMatrix q = random_density(3, seed);
        const double s = von_neumann_entropy(q);
        CHECK(s >= 0.0);
        CHECK(s <= std::log(3.0) + 1e-10);
        CHECK(std::abs(von_neumann_entropy(pad_qutrit_to_4(q).padded) - s) <= 1e-10);
    }
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const DensityMatrix m = random_density(4, seed);
        const double s = von_neumann_entropy(m);
        CHECK(s <= std::log(4.0) + 1e-10);
        CHECK(std::abs(von_neumann_entropy(pad_4_to_6(m).padded) - s) <= 1e-10);
    }
}

TEST_CASE("pure states have zero entropy, mixed states do not") {
    std::mt19937_64 eng(99);
    for (int trial = 0; trial < 50; ++trial) {
        const auto ket = testsupport::random_ket(4, eng);
        const DensityMatrix pure = validate(testsupport::projector(ket));
        CHECK(von_neumann_entropy(pure) <= 1e-9);
        CHECK(hermitian_spectrum(pure.matrix()).max() >= 1.0 - 1e-9);
    }
    for (std::uint64_t seed = 300; seed < 350; ++seed) {
        const DensityMatrix mixed = random_density(4, seed);  // full rank almost surely
        CHECK(von_neumann_entropy(mixed) > 1e-9);
        CHECK(hermitian_spectrum(mixed.matrix()).max() < 1.0 - 1e-9);
    }
}

TEST_CASE("iq curve over the diagonal family") {
    const std::vector<double> grid{-1.0, 0.0, 0.5};
    const auto curve = iq_curve_eq16_serial(grid);
    REQUIRE(curve.size() == 3);
    CHECK(std::abs(curve[0].second) <= 1e-9);
    CHECK(std::abs(curve[1].second - (std::log(3.0) - 4.0 / 3.0 * std::log(2.0))) <= 1e-9);
    CHECK(std::abs(curve[2].second) <= 1e-9);
    for (const auto& [b, iq] : curve) CHECK(iq >= -1e-9);

    CHECK_THROWS_AS(iq_curve_eq16(std::vector<double>{0.6}), DomainError);
    CHECK_THROWS_AS(iq_curve_eq16(std::vector<double>{-1.5}), DomainError);

    // Parallel and serial variants agree bit for bit.
    const auto dense = grid_points({-1.0, 0.5, 61});
    const auto par = iq_curve_eq16(dense);
    const auto ser = iq_curve_eq16_serial(dense);
    REQUIRE(par.size() == ser.size());
    for (size_t k = 0; k < par.size(); ++k) {
        CHECK(par[k].first == ser[k].first);
        CHECK(par[k].second == ser[k].second);
    }
}

TEST_SUITE_END();
