#include <catch2/catch_amalgamated.hpp>

#include "test_helpers.hpp"

using namespace balkit;
using testutil::rel_close;

TEST_CASE("plane points validate and expose the argument convention") {
    CHECK_THROWS_AS(PlanePoint(std::nan(""), 0.0), input_error);
    CHECK(PlanePoint(0, 0).arg_principal() == 0.0);
    CHECK(PlanePoint(0, 1).arg_principal() == Catch::Approx(pi / 2));
    CHECK(PlanePoint(-1, 0).arg_principal() == Catch::Approx(pi));
    CHECK(PlanePoint(0, -1).arg_principal() == Catch::Approx(-pi / 2));
    // left lower quadrant maps above pi, not below -pi/2
    CHECK(PlanePoint(-1, -1).arg_principal() == Catch::Approx(5 * pi / 4));
}

TEST_CASE("construction merges coincident atoms and drops zero masses") {
    DiscreteCharge nu({{1, 0, 2.0}, {1, 0, 3.0}, {2, 0, 0.0}, {0, 1, -1.0}});
    REQUIRE(nu.size() == 2);
    CHECK(nu.atoms()[0].mass == 5.0);
    CHECK(nu.atoms()[1].location.im == 1.0);

    DiscreteCharge cancel({{1, 0, 2.0}, {1, 0, -2.0}});
    CHECK(cancel.empty());

    CHECK_THROWS_AS(DiscreteCharge({{0, 0, 1.0}}, /*origin_excluded=*/true), precondition_error);
}

TEST_CASE("variations recompose the charge atomwise") {
    SECTION("a positive charge is its own upper variation") {
        auto [pos, neg, tot] = variations(DiscreteCharge({{1, 0, 2.0}}));
        CHECK(pos == DiscreteCharge({{1, 0, 2.0}}));
        CHECK(neg.empty());
        CHECK(tot == DiscreteCharge({{1, 0, 2.0}}));
    }
    SECTION("disjoint atoms split by sign") {
        auto [pos, neg, tot] = variations(DiscreteCharge({{1, 0, 1.0}, {2, 0, -3.0}}));
        CHECK(pos == DiscreteCharge({{1, 0, 1.0}}));
        CHECK(neg == DiscreteCharge({{2, 0, 3.0}}));
        CHECK(tot == DiscreteCharge({{1, 0, 1.0}, {2, 0, 3.0}}));
    }
    SECTION("random recomposition") {
        auto r = testutil::rng(7);
        DiscreteCharge nu = gen::random_charge(r, {.atom_count = 100});
        auto [pos, neg, tot] = variations(nu);
        CHECK(pos - neg == nu);
        CHECK(pos + neg == tot);
        for (const Atom& a : pos.atoms()) CHECK(a.mass > 0.0);
        for (const Atom& a : neg.atoms()) CHECK(a.mass > 0.0);
    }
}

TEST_CASE("symmetrizations") {
    CHECK(symmetrize(DiscreteCharge({{1, 1, 1.0}}), SymmetryKind::central) ==
          DiscreteCharge({{-1, -1, 1.0}}));
    CHECK(symmetrize(DiscreteCharge({{1, 1, 1.0}}), SymmetryKind::mirror) ==
          DiscreteCharge({{-1, 1, 1.0}}));

    SECTION("antimirror charge annihilates under iR symmetrization") {
        DiscreteCharge nu({{1, 0, 1.0}, {-1, 0, -1.0}});
        CHECK(symmetrize(nu, SymmetryKind::iR_symmetrization).empty());
    }
    SECTION("even + odd recomposition and involutions") {
        auto r = testutil::rng(11);
        DiscreteCharge nu = gen::random_charge(r, {.atom_count = 60});
        CHECK(symmetrize(nu, SymmetryKind::even_part) + symmetrize(nu, SymmetryKind::odd_part) ==
              nu);
        CHECK(symmetrize(symmetrize(nu, SymmetryKind::central), SymmetryKind::central) == nu);
        CHECK(symmetrize(symmetrize(nu, SymmetryKind::mirror), SymmetryKind::mirror) == nu);
    }
}

TEST_CASE("rotation") {
    CHECK(rotate(DiscreteCharge({{1, 0, 1.0}}), pi / 2) == DiscreteCharge({{0, 1, 1.0}}));

    auto r = testutil::rng(3);
    DiscreteCharge nu = gen::random_charge(r, {.atom_count = 40});
    CHECK(rotate(nu, 0.0) == nu);
    CHECK(rotate(nu, pi) == symmetrize(nu, SymmetryKind::central));

    DiscreteCharge back = rotate(rotate(nu, 0.7), -0.7);
    REQUIRE(back.size() == nu.size());
    for (std::size_t i = 0; i < nu.size(); ++i) {
        CHECK(back.atoms()[i].location.re ==
              Catch::Approx(nu.atoms()[i].location.re).margin(1e-12));
        CHECK(back.atoms()[i].location.im ==
              Catch::Approx(nu.atoms()[i].location.im).margin(1e-12));
    }
}

TEST_CASE("radial and weighted counting") {
    DiscreteCharge nu({{1, 0, 1.0}, {0, 2, 1.0}});
    CHECK(radial_counting(nu, 1.0) == 1.0);  // closed disc, tie inclusive
    CHECK(radial_counting(nu, 2.0) == 2.0);
    CHECK_THROWS_AS(radial_counting(nu, -1.0), precondition_error);

    CHECK(weighted_counting(DiscreteCharge({{1, 0, 1.0}}), WeightFunction::cos_plus(), 1.0) ==
          1.0);

    auto r = testutil::rng(19);
    DiscreteCharge random = gen::random_charge(r, {.atom_count = 80});
    WeightFunction one = WeightFunction::one();
    for (double radius : testutil::linspace(0.1, 120.0, 100))
        CHECK(weighted_counting(random, one, radius) == radial_counting(random, radius));

    WeightFunction cm = WeightFunction::cos_minus();
    double direct = 0.0;
    for (const Atom& a : random.atoms()) {
        double mod = a.location.modulus();
        if (mod <= 50.0 && a.location.re < 0.0)
            direct += a.mass * std::abs(std::cos(a.location.arg_principal()));
    }
    CHECK(rel_close(weighted_counting(random, cm, 50.0), direct, 1e-12));
}

TEST_CASE("weight functions reject aperiodic callables") {
    CHECK_THROWS_AS(WeightFunction([](double t) { return t; }, "ramp"), input_error);
}

TEST_CASE("upper density") {
    CHECK(upper_density(DiscreteCharge{}, {1.0, 10.0}).value == 0.0);
    CHECK_THROWS_AS(upper_density(DiscreteCharge{}, {}), precondition_error);

    DiscreteCharge ints = gen::integers(100);
    auto grid = testutil::linspace(1.0, 100.0, 100);
    UpperDensityEstimate d = upper_density(ints, grid);
    CHECK(d.value == Catch::Approx(1.0));

    UpperDensityEstimate single = upper_density(DiscreteCharge({{1, 0, 1.0}}), {1.0, 10.0, 100.0});
    CHECK(single.value == 1.0);
    CHECK(single.radius == 1.0);
}

TEST_CASE("axis distributions") {
    DiscreteCharge nu({{1, 0, 1.0}, {0, 1, 2.0}});
    AxisCharge im = axis_distribution(nu, Axis::imaginary);
    REQUIRE(im.atoms().size() == 1);
    CHECK(im.atoms()[0].coordinate == 1.0);
    CHECK(im.atoms()[0].mass == 2.0);

    CHECK(axis_distribution(DiscreteCharge({{1, 0, 1.0}}), Axis::imaginary).empty());

    SECTION("interval masses match direct sums and are additive") {
        auto r = testutil::rng(23);
        std::uniform_real_distribution<double> u(-10.0, 10.0);
        std::vector<Atom> atoms;
        for (int i = 0; i < 50; ++i) atoms.emplace_back(u(r), 0.0, u(r));
        DiscreteCharge axis_supported(atoms);
        AxisCharge ax = axis_distribution(axis_supported, Axis::real);

        for (int trial = 0; trial < 50; ++trial) {
            double a = u(r), b = u(r);
            if (a > b) std::swap(a, b);
            double direct = 0.0;
            for (const Atom& at : axis_supported.atoms())
                if (at.location.re > a && at.location.re <= b) direct += at.mass;
            CHECK(ax.interval_mass(a, b) == Catch::Approx(direct).margin(1e-12));

            double c = u(r);
            if (c < a) std::swap(a, c);
            if (c > b) std::swap(b, c);
            CHECK(ax.interval_mass(a, c) ==
                  Catch::Approx(ax.interval_mass(a, std::min(b, c)) +
                                ax.interval_mass(std::min(b, c), c))
                      .margin(2 * ax.error_bound(a, c) + 1e-12));
        }
        CHECK(ax.distribution(0.0) == 0.0);
    }
}

TEST_CASE("charge algebra keeps the canonical form") {
    auto r = testutil::rng(41);
    DiscreteCharge a = gen::random_charge(r, {.atom_count = 30});
    DiscreteCharge b = gen::random_charge(r, {.atom_count = 30});
    CHECK(a + b == b + a);
    CHECK((a - a).empty());
    CHECK(2.0 * a == a + a);
}
