#include <catch2/catch_amalgamated.hpp>

#include "test_helpers.hpp"

using namespace balkit;
using testutil::oracle_log_interval;
using testutil::rel_close;

TEST_CASE("log_interval basic values") {
    CHECK(log_interval(DiscreteCharge{}, Side::right, {0.5, 2}) == 0.0);
    CHECK(log_interval(DiscreteCharge{}, Side::sub, {0.5, 2}) == 0.0);
    CHECK(log_interval(DiscreteCharge({{1, 0, 1.0}}), Side::right, {0.5, 2}) == 1.0);
    // purely imaginary atoms contribute nothing on either side
    DiscreteCharge imag({{0, 2, 5.0}});
    CHECK(log_interval(imag, Side::right, {1, 3}) == 0.0);
    CHECK(log_interval(imag, Side::left, {1, 3}) == 0.0);

    CHECK_THROWS_AS(log_interval(DiscreteCharge({{1, 0, -1.0}}), Side::sub, {1, 2}),
                    precondition_error);
    CHECK_THROWS_AS(log_interval(DiscreteCharge({{1, 0, 1.0}}), Side::right, {0.0, 2.0}),
                    precondition_error);
}

TEST_CASE("log_interval matches the brute-force sum") {
    auto r = testutil::rng(101);
    DiscreteCharge nu = gen::random_charge(r, {.atom_count = 150});
    std::uniform_real_distribution<double> u(0.2, 150.0);
    for (int k = 0; k < 200; ++k) {
        double a = u(r), b = u(r);
        if (a > b) std::swap(a, b);
        if (a == b) continue;
        for (Side s : {Side::right, Side::left})
            CHECK(rel_close(log_interval(nu, s, {a, b}), oracle_log_interval(nu, s, a, b), 1e-12));
    }
}

TEST_CASE("reversed endpoints flip the sign") {
    DiscreteCharge nu({{0.7, 0.1, 2.0}});
    CHECK(log_interval(nu, Side::right, {1.0, 0.5}) == -log_interval(nu, Side::right, {0.5, 1.0}));
    CHECK(breve_log_interval(nu, Side::right, {1.0, 0.5}) ==
          -breve_log_interval(nu, Side::right, {0.5, 1.0}));
}

TEST_CASE("breve variant integrates the step counting function exactly") {
    CHECK(breve_log_interval(DiscreteCharge{}, Side::right, {0.5, 2}) == 0.0);
    // single unit atom at 1: integral of 1/t^2 over (1, 2]
    CHECK(breve_log_interval(DiscreteCharge({{1, 0, 1.0}}), Side::right, {0.5, 2}) ==
          Catch::Approx(0.5).epsilon(1e-14));

    SECTION("integration by parts identity, both weights") {
        auto r = testutil::rng(103);
        WeightFunction cp = WeightFunction::cos_plus(), cm = WeightFunction::cos_minus();
        for (int trial = 0; trial < 40; ++trial) {
            DiscreteCharge nu = gen::random_charge(r, {.atom_count = 60});
            std::uniform_real_distribution<double> u(0.3, 140.0);
            double a = u(r), b = u(r);
            if (a > b) std::swap(a, b);
            if (a == b) continue;
            double lhs_r = log_interval(nu, Side::right, {a, b});
            double rhs_r = weighted_counting(nu, cp, b) / b - weighted_counting(nu, cp, a) / a +
                           breve_log_interval(nu, Side::right, {a, b});
            CHECK(rel_close(lhs_r, rhs_r, 1e-10));
            double lhs_l = log_interval(nu, Side::left, {a, b});
            double rhs_l = weighted_counting(nu, cm, b) / b - weighted_counting(nu, cm, a) / a +
                           breve_log_interval(nu, Side::left, {a, b});
            CHECK(rel_close(lhs_l, rhs_l, 1e-10));
        }
    }
}

TEST_CASE("characteristic logarithm") {
    DiscreteCharge nu({{1, 0, 1.0}, {2, 0, 1.0}});
    CHECK(characteristic_log(nu, Side::right, 3.0) == Catch::Approx(1.5).epsilon(1e-15));
    CHECK(characteristic_log(DiscreteCharge({{-1, 0, 1.0}}), Side::right, 2.0) == 0.0);
    CHECK_THROWS_AS(characteristic_log(DiscreteCharge({{0, 0, 1.0}}), Side::right, 1.0),
                    precondition_error);

    auto r = testutil::rng(107);
    DiscreteCharge random = gen::random_charge(r, {.atom_count = 50, .modulus_min = 0.5});
    double eps = 0.25;  // below the minimal modulus
    for (Side s : {Side::right, Side::left})
        CHECK(characteristic_log(random, s, 100.0) == log_interval(random, s, {eps, 100.0}));
}

TEST_CASE("symmetry identities for interval functions") {
    auto r = testutil::rng(109);
    for (int trial = 0; trial < 25; ++trial) {
        DiscreteCharge nu = gen::random_charge(r, {.atom_count = 80});
        DiscreteCharge nu_c = symmetrize(nu, SymmetryKind::central);
        DiscreteCharge nu_m = symmetrize(nu, SymmetryKind::mirror);
        std::uniform_real_distribution<double> u(0.3, 130.0);
        double a = u(r), b = u(r);
        if (a > b) std::swap(a, b);
        if (a == b) continue;
        IntervalPair iv{a, b};
        CHECK(rel_close(log_interval(nu, Side::right, iv), log_interval(nu_c, Side::left, iv), 1e-12));
        CHECK(rel_close(log_interval(nu, Side::right, iv), log_interval(nu_m, Side::left, iv), 1e-12));
        CHECK(rel_close(log_interval(nu, Side::left, iv), log_interval(nu_c, Side::right, iv), 1e-12));
        CHECK(rel_close(log_interval(nu, Side::left, iv), log_interval(nu_m, Side::right, iv), 1e-12));
        CHECK(rel_close(breve_log_interval(nu, Side::right, iv),
                        breve_log_interval(nu_c, Side::left, iv), 1e-12));
        CHECK(rel_close(breve_log_interval(nu, Side::left, iv),
                        breve_log_interval(nu_m, Side::right, iv), 1e-12));
    }
    SECTION("submeasure is symmetry-invariant for positive measures") {
        DiscreteCharge mu = gen::random_charge(r, {.atom_count = 60, .positive = true});
        IntervalPair iv{1.0, 90.0};
        double l = log_interval(mu, Side::sub, iv);
        CHECK(rel_close(l, log_interval(symmetrize(mu, SymmetryKind::central), Side::sub, iv), 1e-12));
        CHECK(rel_close(l, log_interval(symmetrize(mu, SymmetryKind::mirror), Side::sub, iv), 1e-12));
    }
}

TEST_CASE("additivity and linearity") {
    auto r = testutil::rng(113);
    DiscreteCharge nu = gen::random_charge(r, {.atom_count = 70});
    DiscreteCharge eta = gen::random_charge(r, {.atom_count = 40});
    for (Side s : {Side::right, Side::left}) {
        double whole = log_interval(nu, s, {0.5, 80.0});
        double split = log_interval(nu, s, {0.5, 9.0}) + log_interval(nu, s, {9.0, 80.0});
        CHECK(rel_close(whole, split, 1e-13));
        CHECK(rel_close(log_interval(nu + eta, s, {0.5, 80.0}),
                        log_interval(nu, s, {0.5, 80.0}) + log_interval(eta, s, {0.5, 80.0}),
                        1e-12));
    }
}

TEST_CASE("charges supported on the imaginary axis annihilate") {
    std::vector<Atom> atoms;
    for (int k = 1; k <= 20; ++k) atoms.emplace_back(0.0, k * 0.7, (k % 2) ? 1.0 : -2.0);
    DiscreteCharge nu(atoms);
    for (double R : {2.0, 5.0, 13.0}) {
        CHECK(log_interval(nu, Side::right, {0.5, R}) == 0.0);
        CHECK(log_interval(nu, Side::left, {0.5, R}) == 0.0);
    }
}

TEST_CASE("scaling stability stays below the oracle constant") {
    DiscreteCharge mu = gen::integers(4000);  // density-1 fixture
    double a = 0.5, b = 2.0;
    double oracle_const = 0.0;
    std::vector<IntervalPair> pairs = pairs_from(GridSpec{1.0, 1000.0, 2.0});
    for (const IntervalPair& iv : pairs) {
        double boundary = std::abs(log_interval(mu, Side::right, {a * iv.r, iv.r})) +
                          std::abs(log_interval(mu, Side::right, {iv.R, b * iv.R}));
        oracle_const = std::max(oracle_const, boundary);
    }
    for (const IntervalPair& iv : pairs) {
        double diff = std::abs(log_interval(mu, Side::right, iv) -
                               log_interval(mu, Side::right, {a * iv.r, b * iv.R}));
        CHECK(diff <= oracle_const + 1e-12);
    }
    // the constant itself stays near ln(1/a) + ln(b)
    CHECK(oracle_const <= std::log(1 / a) + std::log(b) + 1.0);
}

TEST_CASE("logchar table carries the pairwise max for positive measures") {
    DiscreteCharge mu = gen::nonzero_integers(50);
    LogCharTable t = make_logchar_table(mu, pairs_from(GridSpec{1.0, 32.0, 2.0}), "ints");
    REQUIRE(t.charge_positive);
    for (std::size_t i = 0; i < t.grid.size(); ++i)
        CHECK(t.values_sub[i] == std::max(t.values_right[i], t.values_left[i]));

    LogCharTable s = make_logchar_table(DiscreteCharge({{1, 0, -1.0}}), t.grid, "signed");
    CHECK(std::isnan(s.values_sub[0]));
}

TEST_CASE("dominates") {
    std::vector<IntervalPair> pairs = pairs_from(GridSpec::per_decade(1.0, 1e4, 4));

    SECTION("a measure dominates itself with zero excess") {
        DiscreteCharge mu = gen::integers(300);
        DominationReport rep = dominates(mu, mu, pairs_from(GridSpec{1.0, 256.0, 2.0}));
        CHECK(rep.sup_excess == 0.0);
        CHECK(rep.verdict == BoundVerdict::bounded);
    }
    SECTION("subsequences are dominated") {
        std::vector<Atom> w_atoms;
        for (int k = 1; k <= 2000; ++k) w_atoms.emplace_back(0.5 * k, 0.0, 1.0);
        DiscreteCharge W(w_atoms);          // 0.5, 1.0, 1.5, ...
        DiscreteCharge Z = gen::integers(1000);  // subsequence of W
        DominationReport rep = dominates(Z, W, pairs_from(GridSpec{1.0, 800.0, 2.0}));
        CHECK(rep.sup_excess <= 0.0);
        CHECK(rep.verdict == BoundVerdict::bounded);
    }
    SECTION("density 2 vs 1 diverges at half the decade rate") {
        DiscreteCharge nu = gen::integers(20000);
        DiscreteCharge mu = gen::integers(20000, 2, 2);
        DominationReport rep = dominates(nu, mu, pairs);
        CHECK(rep.verdict == BoundVerdict::diverging);
        // accumulated excess over decade-wide windows (r, 10r], r >= 10
        double sum = 0.0;
        int count = 0;
        for (const PairPoint& p : rep.excess) {
            if (p.r < 10.0 || std::abs(p.R / p.r - 10.0) > 1e-9) continue;
            sum += p.value;
            ++count;
        }
        REQUIRE(count > 0);
        CHECK(sum / count == Catch::Approx(0.5 * std::log(10.0)).epsilon(0.10));
    }
    SECTION("signed inputs are rejected") {
        CHECK_THROWS_AS(dominates(DiscreteCharge({{1, 0, -1.0}}), gen::integers(5),
                                  pairs_from(GridSpec{1.0, 8.0, 2.0})),
                        precondition_error);
    }
}

TEST_CASE("sequence criterion") {
    SECTION("equal measures stay at zero") {
        DiscreteCharge mu = gen::integers(300);
        DominationReport rep = sequence_criterion(mu, mu, 2.0, 8);
        CHECK(rep.sup_excess == 0.0);
        CHECK(rep.verdict == BoundVerdict::bounded);
    }
    SECTION("empty charge is dominated by anything") {
        DominationReport rep = sequence_criterion(DiscreteCharge{}, gen::integers(300), 2.0, 8);
        CHECK(rep.sup_excess <= 0.0);
        CHECK(rep.verdict == BoundVerdict::bounded);
    }
    SECTION("agrees with the pair-grid verdicts") {
        std::vector<Atom> w_atoms;
        for (int k = 1; k <= 16000; ++k) w_atoms.emplace_back(0.5 * k, 0.0, 1.0);
        DiscreteCharge W(w_atoms);
        DiscreteCharge Z = gen::integers(8000);
        CHECK(sequence_criterion(Z, W, 2.0, 13).verdict == BoundVerdict::bounded);

        DiscreteCharge nu = gen::integers(10000);
        DiscreteCharge mu = gen::integers(10000, 2, 2);
        DominationReport div = sequence_criterion(nu, mu, 2.0, 13);
        CHECK(div.verdict == BoundVerdict::diverging);
    }
}
