#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "discordium/measurement.hpp"
#include "discordium/sampling.hpp"
#include "discordium/xstate.hpp"

using namespace discordium;

TEST_CASE("x2_state matrix layout") {
    XState2Params p;
    p.alpha3 = 0.2;
    p.beta3 = -0.1;
    p.gamma11 = 0.3;
    p.gamma22 = 0.1;
    p.gamma33 = 0.15;
    const auto m = x2_state(p).matrix();

    // diagonal from alpha3, beta3, gamma33
    CHECK(m(0, 0).real() == doctest::Approx((1 + 0.2 - 0.1 + 0.15) / 4).epsilon(1e-14));
    CHECK(m(1, 1).real() == doctest::Approx((1 + 0.2 + 0.1 - 0.15) / 4).epsilon(1e-14));
    CHECK(m(2, 2).real() == doctest::Approx((1 - 0.2 - 0.1 - 0.15) / 4).epsilon(1e-14));
    CHECK(m(3, 3).real() == doctest::Approx((1 - 0.2 + 0.1 + 0.15) / 4).epsilon(1e-14));

    // anti-diagonal from gamma11 -/+ gamma22
    CHECK(m(0, 3) == complexd((0.3 - 0.1) / 4));
    CHECK(m(1, 2) == complexd((0.3 + 0.1) / 4));

    // everything off the X pattern vanishes
    for (auto [i, j] : std::vector<std::pair<std::size_t, std::size_t>>{
             {0, 1}, {0, 2}, {1, 3}, {2, 3}}) {
        CHECK(std::abs(m(i, j)) == 0.0);
        CHECK(std::abs(m(j, i)) == 0.0);
    }

    XState2Params bad;
    bad.gamma33 = 2.0;
    CHECK_THROWS_AS(x2_state(bad), not_positive);
}

TEST_CASE("qubit_qutrit_state reduced states") {
    QubitQutritParams p;
    p.alpha3 = 0.3;
    p.beta3 = 0.1;
    p.beta8 = -0.05;
    p.gamma33 = 0.1;
    p.gamma14 = 0.1;
    const auto rho = qubit_qutrit_state(p);

    const auto ra = partial_trace(rho, Subsystem::A).matrix();
    CHECK(ra(0, 0).real() == doctest::Approx((1 + p.alpha3) / 2).epsilon(1e-13));
    CHECK(ra(1, 1).real() == doctest::Approx((1 - p.alpha3) / 2).epsilon(1e-13));
    CHECK(std::abs(ra(0, 1)) <= 1e-15);

    // the sqrt(3) convention on the beta block puts the qutrit marginal at
    // (1/3)(1 + sqrt3 b3 + b8, 1 - sqrt3 b3 + b8, 1 - 2 b8)
    const double r3 = std::sqrt(3.0);
    const auto rb = partial_trace(rho, Subsystem::B).matrix();
    CHECK(rb(0, 0).real() ==
          doctest::Approx((1 + r3 * p.beta3 + p.beta8) / 3).epsilon(1e-13));
    CHECK(rb(1, 1).real() ==
          doctest::Approx((1 - r3 * p.beta3 + p.beta8) / 3).epsilon(1e-13));
    CHECK(rb(2, 2).real() == doctest::Approx((1 - 2 * p.beta8) / 3).epsilon(1e-13));
}

TEST_CASE("worked example state") {
    CHECK_THROWS_AS(example_state(-0.01), parameter_out_of_range);
    CHECK_THROWS_AS(example_state(0.51), parameter_out_of_range);

    const double p = 0.3;
    const auto rho = example_state(p);

    // marginals
    const auto ra = partial_trace(rho, Subsystem::A).matrix();
    CHECK(ra.max_abs_diff(ComplexMatrix::identity(2) * complexd(0.5)) <= 1e-15);
    const auto rb = partial_trace(rho, Subsystem::B).matrix();
    CHECK(rb(0, 0).real() == doctest::Approx((1 - p) / 2).epsilon(1e-14));
    CHECK(rb(1, 1).real() == doctest::Approx(p).epsilon(1e-14));
    CHECK(rb(2, 2).real() == doctest::Approx((1 - p) / 2).epsilon(1e-14));

    // spectrum {1-2p, p, p/2, p/2, 0, 0}
    auto eigs = eigh(rho.matrix()).eigenvalues;
    std::sort(eigs.begin(), eigs.end(), std::greater<>());
    CHECK(eigs[0] == doctest::Approx(1 - 2 * p).epsilon(1e-12));
    CHECK(eigs[1] == doctest::Approx(p).epsilon(1e-12));
    CHECK(eigs[2] == doctest::Approx(p / 2).epsilon(1e-12));
    CHECK(eigs[3] == doctest::Approx(p / 2).epsilon(1e-12));
    CHECK(std::abs(eigs[4]) <= 1e-12);
    CHECK(std::abs(eigs[5]) <= 1e-12);
}

TEST_CASE("example_chi_entropy closed form") {
    CHECK(example_chi_entropy(0.25) == doctest::Approx(2.5).epsilon(1e-14));
    for (double p : {0.0, 0.05, 0.1, 0.2, 0.3, 0.4, 0.5}) {
        const auto chi = dephase(example_state(p), ProjectiveBasis::computational(2),
                                 ProjectiveBasis::computational(3), DephaseMode::Both);
        CHECK(std::abs(von_neumann_entropy(chi) - example_chi_entropy(p)) <= 1e-12);
    }
    CHECK(example_discord_analytic(0.1) == doctest::Approx(0.9));
}

TEST_CASE("analytic qubit-qutrit spectra are adjudicated numerically") {
    // the trivial member: every formula collapses to 1/6 and matches
    const auto flat = qq_spectrum_analytic(QubitQutritParams{});
    CHECK(flat.phi_matches);
    CHECK(flat.psi_matches);
    for (double v : flat.phi) CHECK(v == doctest::Approx(1.0 / 6.0).epsilon(1e-14));
    for (double v : flat.psi) CHECK(v == doctest::Approx(1.0 / 6.0).epsilon(1e-14));

    // generic members: the printed expressions drift from the eigensolver;
    // the flags report that honestly instead of trusting the formulas
    std::mt19937_64 rng(8);
    for (int rep = 0; rep < 20; ++rep) {
        QubitQutritParams p;
        const auto rho = random_qq_state(rng, &p);
        const auto spec = qq_spectrum_analytic(p);
        CHECK(spec.phi_matches == (spec.phi_deviation <= 1e-8));
        CHECK(spec.psi_matches == (spec.psi_deviation <= 1e-8));
        // the printed expressions miss the trace by exactly alpha3/3: the
        // last two entries both carry -alpha3 where one should flip sign
        double sphi = 0.0, spsi = 0.0;
        for (double v : spec.phi) sphi += v;
        for (double v : spec.psi) spsi += v;
        CHECK(sphi == doctest::Approx(1.0 - p.alpha3 / 3.0).epsilon(1e-12));
        CHECK(spsi == doctest::Approx(sphi).epsilon(1e-12));
        // sanity on the sampler while we are here
        CHECK(rho.matrix().trace().real() == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("random X-states keep the X pattern") {
    std::mt19937_64 rng(41);
    for (int rep = 0; rep < 50; ++rep) {
        const auto m = random_x2_state(rng).matrix();
        CHECK(std::abs(m(0, 1)) == 0.0);
        CHECK(std::abs(m(0, 2)) == 0.0);
        CHECK(std::abs(m(1, 3)) == 0.0);
        CHECK(std::abs(m(2, 3)) == 0.0);
        CHECK(eigh(m).eigenvalues.front() >= -1e-12);
    }
}
