#include <catch2/catch_amalgamated.hpp>

#include "test_helpers.hpp"

using namespace balkit;

TEST_CASE("separation check") {
    CHECK(separation_check(DiscreteCharge({{1, 0, 1.0}}), 0.5).separated);
    CHECK(separation_check(DiscreteCharge({{1, 0, 1.0}}), 0.5).d_min == 1.0);
    CHECK_FALSE(separation_check(DiscreteCharge({{0, 1, 1.0}}), 0.1).separated);
    CHECK(separation_check(DiscreteCharge{}, 0.3).separated);

    DiscreteCharge diag({{1, 1, 1.0}, {2, -2, 1.0}});
    CHECK(separation_check(diag, 0.5).d_min == Catch::Approx(std::sqrt(0.5)));
    CHECK_THROWS_AS(separation_check(diag, 0.0), precondition_error);
}

TEST_CASE("compensator hand-traced cases") {
    SECTION("negative unit atom at 1") {
        CompensatorResult res = compensator_alpha(DiscreteCharge({{1, 0, -1.0}}), Side::right);
        CHECK(res.M_side == 0.0);
        REQUIRE(res.alpha.atoms().size() == 1);
        CHECK(res.alpha.atoms()[0].coordinate == 1.0);
        CHECK(res.alpha.atoms()[0].mass == 1.0);
        CHECK(res.achieved_bound == 0.0);
        // a jumps 0 -> 1 at t = 1
        REQUIRE(res.a_function.size() == 2);
        CHECK(res.a_function[0].value == 0.0);
        CHECK(res.a_function[1].value == 1.0);
        // the compensated charge has identically zero right interval function
        DiscreteCharge fixed = DiscreteCharge({{1, 0, -1.0}}) + res.alpha_charge;
        CHECK(fixed.empty());
    }
    SECTION("positive unit atom at 1") {
        CompensatorResult res = compensator_alpha(DiscreteCharge({{1, 0, 1.0}}), Side::right);
        CHECK(res.M_side == 1.0);
        CHECK(res.alpha.atoms().empty());
        CHECK(res.a_function.front().value == -1.0);
        CHECK(res.achieved_bound == 1.0);
        CHECK(res.achieved_bound <= 2 * res.M_side);
    }
    SECTION("empty charge") {
        CompensatorResult res = compensator_alpha(DiscreteCharge{}, Side::right);
        CHECK(res.M_side == 0.0);
        CHECK(res.alpha.atoms().empty());
    }
    SECTION("origin atoms are rejected") {
        CHECK_THROWS_AS(compensator_alpha(DiscreteCharge({{0, 0, 1.0}}), Side::right),
                        precondition_error);
    }
}

TEST_CASE("compensator invariants on random charges") {
    auto rng = testutil::rng(401);
    for (int trial = 0; trial < 100; ++trial) {
        DiscreteCharge eta = gen::random_charge(
            rng, {.atom_count = 40, .modulus_min = 0.3, .modulus_max = 300.0});
        Side side = trial % 2 ? Side::right : Side::left;
        CompensatorResult res = compensator_alpha(eta, side);

        for (std::size_t i = 0; i + 1 < res.a_function.size(); ++i)
            CHECK(res.a_function[i].value <= res.a_function[i + 1].value + 1e-15);
        for (const AxisAtom& a : res.alpha.atoms()) {
            CHECK(a.mass > 0.0);
            CHECK(a.coordinate != 0.0);
        }
        CHECK(res.achieved_bound <= 2 * res.M_side + 1e-9);

        DiscreteCharge fixed = eta + res.alpha_charge;
        for (const StepPiece& piece : res.a_function) {
            if (!std::isfinite(piece.t_to)) continue;
            double l = characteristic_log(fixed, side, piece.t_to);
            CHECK(l <= res.M_side + 1e-10);
            CHECK(l >= -res.M_side - 1e-10);
        }
    }
}

TEST_CASE("pr52 pipeline") {
    auto pairs = pairs_from(GridSpec::per_decade(1.0, 1e4, 2));
    SECTION("identical measures produce the zero decomposition") {
        auto rng = testutil::rng(419);
        DiscreteCharge mu = gen::random_charge(rng, {.atom_count = 25, .positive = true});
        Pr52Result res = pr52_pipeline(mu, mu, pairs);
        CHECK(res.alpha_charge.empty());
        CHECK(res.residual_asg_max <= 1e-12);
        CHECK(res.residual_even_max <= 1e-12);
        CHECK(res.lindelof_sum.trend.sup <= 1e-12);
        CHECK(res.warnings.empty());
    }
    SECTION("single atom against the empty measure") {
        Pr52Result res = pr52_pipeline(DiscreteCharge({{2, 0, 1.0}}), DiscreteCharge{}, pairs);
        CHECK(res.comp_right.alpha.atoms().empty());  // sup attained in every suffix
        CHECK(res.comp_left.alpha.atoms().empty());
        CHECK(res.residual_asg_max <= 1e-9);
        CHECK(res.residual_even_max <= 1e-9);
        // theta is the two-sided sweep of the atom at 2
        CHECK(res.theta.output.interval_mass(-2.0, 2.0) ==
              Catch::Approx(harmonic_charge_genus1({2, 0}, -2.0, 2.0)).margin(1e-13));
    }
    SECTION("random contained pair: identities and bounded Lindelof profile") {
        auto rng = testutil::rng(421);
        DiscreteCharge mu = gen::random_charge(
            rng, {.atom_count = 40, .modulus_min = 1.5, .modulus_max = 5000.0,
                  .positive = true, .separation = 0.25});
        int index = 0;
        DiscreteCharge nu = mu.restricted([&index](const Atom&) { return index++ % 2 == 0; });
        Pr52Options opts;
        opts.uniform_gamma = true;
        opts.separation_threshold = 0.2;
        Pr52Result res = pr52_pipeline(nu, mu, pairs, opts);
        CHECK(res.warnings.empty());
        CHECK(res.residual_asg_max <= 1e-9);
        CHECK(res.residual_even_max <= 1e-9);
        CHECK(res.lindelof_sum.verdict == HoldVerdict::holds_on_range);
        REQUIRE(res.c_uniform.has_value());
        CHECK(*res.c_uniform >= 0.0);
        // the density bound for the redefined beta is reported, not targeted
        REQUIRE(res.beta_prime_density_sup.has_value());
        CHECK(*res.beta_prime_density_sup >= 0.0);
        CHECK(std::isfinite(*res.beta_prime_density_sup));
    }
    SECTION("preconditions") {
        CHECK_THROWS_AS(pr52_pipeline(DiscreteCharge({{1, 0, -1.0}}), DiscreteCharge{}, pairs),
                        precondition_error);
        Pr52Result warned = pr52_pipeline(gen::integers(300), gen::integers(300, 2, 2),
                                          pairs_from(GridSpec{1.0, 256.0, 2.0}));
        CHECK(!warned.warnings.empty());
    }
}

TEST_CASE("Lindelof equalizer hand-traced cases") {
    SECTION("single atom on the imaginary axis") {
        EqualizerResult res = lindelof_equalizer(DiscreteCharge({{0, 1.5, 1.0}}), 1);
        REQUIRE(res.annuli.size() == 1);
        const EqualizerAnnulus& a = res.annuli[0];
        CHECK(a.l_right_rot == 0.0);
        CHECK(a.l_left_rot == Catch::Approx(2.0 / 3.0).margin(1e-15));
        CHECK(a.b_right == Catch::Approx(4.0 / 3.0).margin(1e-15));
        CHECK(a.b_left == 0.0);
        CHECK(a.common_value == Catch::Approx(2.0 / 3.0).margin(1e-15));
        CHECK(a.residual <= 1e-12);
        // the correcting atom rotates onto the positive real axis, so it sits at -2i
        REQUIRE(res.beta.atoms().size() == 1);
        CHECK(res.beta.atoms()[0].coordinate == -2.0);
        CHECK(res.beta.atoms()[0].mass == Catch::Approx(4.0 / 3.0));
    }
    SECTION("even measures need no correction") {
        auto rng = testutil::rng(431);
        DiscreteCharge mu = gen::random_even_measure(rng, {.atom_count = 40, .modulus_max = 100.0});
        EqualizerResult res = lindelof_equalizer(mu, 8);
        CHECK(res.beta.atoms().empty());
        for (const EqualizerAnnulus& a : res.annuli) CHECK(a.residual <= 1e-12);
    }
    SECTION("diagonal atom") {
        DiscreteCharge mu({{1.5 * std::cos(pi / 4), 1.5 * std::sin(pi / 4), 1.0}});
        EqualizerResult res = lindelof_equalizer(mu, 1);
        const EqualizerAnnulus& a = res.annuli[0];
        CHECK(a.b_right == Catch::Approx(2.0 * std::cos(pi / 4) / 1.5).margin(1e-14));
        CHECK(a.residual <= 1e-12);
    }
}

TEST_CASE("Lindelof equalizer on random measures") {
    auto rng = testutil::rng(433);
    for (int trial = 0; trial < 10; ++trial) {
        // the [R] precondition holds for mirror-symmetric measures
        DiscreteCharge mu = gen::random_mirror_measure(
            rng, {.atom_count = 50, .modulus_min = 1.2, .modulus_max = 5000.0});
        EqualizerResult res = lindelof_equalizer(mu, 13);
        for (const EqualizerAnnulus& a : res.annuli) CHECK(a.residual <= 1e-12);
        CHECK(res.mus_residual == 0.0);
        for (const AxisAtom& a : res.beta.atoms()) CHECK(a.mass > 0.0);

        DiscreteCharge equalized = mu + res.beta_charge;
        LindelofLogcharReport rep =
            lindelof_via_logchar(equalized, pairs_from(GridSpec::per_decade(1.0, 8192.0, 2)));
        CHECK(rep.verdict == HoldVerdict::holds_on_range);
    }
}

TEST_CASE("equalizer offers the even alternative for half-plane measures") {
    auto rng = testutil::rng(439);
    DiscreteCharge mu = gen::random_charge(
        rng, {.atom_count = 30, .modulus_min = 1.2, .modulus_max = 900.0, .positive = true});
    mu = mu.restricted([](const Atom& a) { return a.location.re >= 0.0; });
    EqualizerResult res = lindelof_equalizer(mu, 10);
    REQUIRE(res.even_alternative.has_value());
    CHECK(res.even_alternative_lindelof->report.trend.sup <= 1e-12);
}
