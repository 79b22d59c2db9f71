#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "discordium/discord.hpp"
#include "discordium/sampling.hpp"
#include "discordium/xstate.hpp"

using namespace discordium;

namespace {

DensityMatrix bell_state() {
    ComplexMatrix m(4, 4);
    m(0, 0) = m(0, 3) = m(3, 0) = m(3, 3) = 0.5;
    return validate_density(m, 2, 2);
}

ComplexMatrix random_unitary(std::size_t n, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss;
    ComplexMatrix h(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        h(i, i) = gauss(rng);
        for (std::size_t j = i + 1; j < n; ++j) {
            h(i, j) = complexd(gauss(rng), gauss(rng));
            h(j, i) = std::conj(h(i, j));
        }
    }
    return eigh(h).eigenvectors;
}

// classical-quantum state: discord vanishes when A is measured but not
// when B is, because the B-side conditionals are non-orthogonal
DensityMatrix cq_state() {
    ComplexMatrix zero(2, 2), plus(2, 2);
    zero(0, 0) = 1.0;
    plus(0, 0) = plus(0, 1) = plus(1, 0) = plus(1, 1) = 0.5;
    ComplexMatrix p0(2, 2), p1(2, 2);
    p0(0, 0) = 1.0;
    p1(1, 1) = 1.0;
    return validate_density(tensor(p0, zero) * complexd(0.5) + tensor(p1, plus) * complexd(0.5),
                            2, 2);
}

}  // namespace

TEST_CASE("mutual information") {
    // product state carries none
    ComplexMatrix a(2, 2), b(3, 3);
    a(0, 0) = 0.7;
    a(1, 1) = 0.3;
    b(0, 0) = 0.5;
    b(1, 1) = 0.3;
    b(2, 2) = 0.2;
    CHECK(mutual_information(validate_density(tensor(a, b), 2, 3)) ==
          doctest::Approx(0.0).epsilon(1e-12));

    // a Bell pair carries two bits
    CHECK(mutual_information(bell_state()) == doctest::Approx(2.0).epsilon(1e-12));

    // worked example at p = 0.1: S_A = 1, S_B and S_AB in closed form
    const double p = 0.1;
    const auto ex = example_state(p);
    const double sB = -2 * ((1 - p) / 2) * std::log2((1 - p) / 2) - p * std::log2(p);
    const double sAB = -(1 - 2 * p) * std::log2(1 - 2 * p) - p * std::log2(p) -
                       2 * (p / 2) * std::log2(p / 2);
    CHECK(mutual_information(ex) == doctest::Approx(1.0 + sB - sAB).epsilon(1e-10));
}

TEST_CASE("discord of a Bell pair is one bit") {
    for (Subsystem side : {Subsystem::A, Subsystem::B}) {
        const auto rep = quantum_discord(bell_state(), side);
        CHECK(rep.mutual_information == doctest::Approx(2.0).epsilon(1e-9));
        CHECK(rep.classical_correlation == doctest::Approx(1.0).epsilon(1e-7));
        CHECK(rep.discord == doctest::Approx(1.0).epsilon(1e-7));
    }
}

TEST_CASE("classically correlated states have zero discord") {
    ComplexMatrix m(4, 4);
    m(0, 0) = 0.4;
    m(3, 3) = 0.6;
    const auto rho = validate_density(m, 2, 2);
    for (Subsystem side : {Subsystem::A, Subsystem::B}) {
        const auto rep = quantum_discord(rho, side);
        CHECK(rep.discord <= 1e-7);
        CHECK(rep.classical_correlation ==
              doctest::Approx(rep.mutual_information).epsilon(1e-7));
    }
}

TEST_CASE("discord is asymmetric") {
    const auto rho = cq_state();
    const auto left = quantum_discord(rho, Subsystem::A);
    const auto right = quantum_discord(rho, Subsystem::B);
    CHECK(left.discord <= 1e-7);
    CHECK(right.discord >= 0.05);
}

TEST_CASE("worked example: optimal measurement beats the computational basis") {
    const double p = 0.1;
    const auto ex = example_state(p);

    // the minimum conditional entropy on side B equals p; it is attained
    // by a basis mixing |0> and |2>, not by the computational basis
    const auto r = min_conditional_entropy(ex, Subsystem::B);
    CHECK(r.value == doctest::Approx(p).epsilon(1e-6));

    const double comp = detail::conditional_entropy_objective(
        ex, Subsystem::B, std::vector<double>(6, 0.0));
    CHECK(comp > r.value + 0.1);

    // hence J = S(rho_A) - p = 1 - p and D = I - (1 - p)
    const auto rep = quantum_discord(ex, Subsystem::B);
    CHECK(rep.classical_correlation == doctest::Approx(1.0 - p).epsilon(1e-6));
    CHECK(rep.discord ==
          doctest::Approx(rep.mutual_information - (1.0 - p)).epsilon(1e-6));

    const auto basis = basis_from_params(rep.optimal_basis_params);
    CHECK(conditional_entropy(measure_subsystem(ex, basis, Subsystem::B)) ==
          doctest::Approx(p).epsilon(1e-6));
}

TEST_CASE("optimizer agrees with the brute-force oracle") {
    std::mt19937_64 rng(9);
    for (int rep = 0; rep < 6; ++rep) {
        const auto rho = random_density(2, 2, rng);
        const double opt = min_conditional_entropy(rho, Subsystem::B).value;
        const double oracle = brute_force_oracle(rho, Subsystem::B, 40);
        CHECK(opt <= oracle + 1e-9);   // refinement can only improve on a grid
        CHECK(oracle - opt <= 5e-3);   // and the grid is dense enough to be close
    }
    CHECK_THROWS_AS(brute_force_oracle(random_density(2, 4, rng), Subsystem::B, 8),
                    unsupported_dimension);
}

TEST_CASE("discord is invariant under local unitaries") {
    std::mt19937_64 rng(123);
    for (int rep = 0; rep < 3; ++rep) {
        const auto rho = random_x2_state(rng);
        const auto u = tensor(random_unitary(2, rng), random_unitary(2, rng));
        const auto rotated = validate_density(u * rho.matrix() * u.dagger(), 2, 2);
        const auto d0 = quantum_discord(rho, Subsystem::B);
        const auto d1 = quantum_discord(rotated, Subsystem::B);
        CHECK(d1.discord == doctest::Approx(d0.discord).epsilon(1e-5));
        CHECK(d1.mutual_information ==
              doctest::Approx(d0.mutual_information).epsilon(1e-10));
    }
}

TEST_CASE("discord is non-negative and bounded by mutual information") {
    std::mt19937_64 rng(77);
    for (int rep = 0; rep < 8; ++rep) {
        const auto rho = random_density(2, 2, rng);
        const auto r = quantum_discord(rho, Subsystem::B);
        CHECK(r.discord >= 0.0);
        CHECK(r.discord <= r.mutual_information + 1e-9);
        CHECK(r.classical_correlation >= -1e-9);
    }
}

TEST_CASE("optimizer config validation") {
    OptimizerConfig bad;
    bad.coarse_grid_points_per_angle = 0;
    CHECK_THROWS_AS(quantum_discord(bell_state(), Subsystem::B, bad), parameter_out_of_range);
}
