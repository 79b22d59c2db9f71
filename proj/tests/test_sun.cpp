#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "discordium/sampling.hpp"
#include "discordium/sun.hpp"

using namespace discordium;

TEST_CASE("projector") {
    CHECK(sun::projector(1, 1, 2).max_abs_diff(ComplexMatrix{{1.0, 0.0}, {0.0, 0.0}}) == 0.0);
    CHECK(sun::projector(1, 2, 2).max_abs_diff(ComplexMatrix{{0.0, 1.0}, {0.0, 0.0}}) == 0.0);
    const auto p33 = sun::projector(3, 3, 3);
    CHECK(p33(2, 2) == complexd(1.0));
    CHECK(p33.max_abs() == 1.0);
    CHECK_THROWS_AS(sun::projector(0, 1, 2), index_out_of_range);
    CHECK_THROWS_AS(sun::projector(1, 4, 3), index_out_of_range);
}

TEST_CASE("generators: N=2 is the Pauli set") {
    const auto g = sun::generators(2);
    REQUIRE(g.count() == 3);
    CHECK(g.generators[0].max_abs_diff(ComplexMatrix{{0.0, 1.0}, {1.0, 0.0}}) == 0.0);
    CHECK(g.generators[1].max_abs_diff(
              ComplexMatrix{{0.0, complexd(0, -1)}, {complexd(0, 1), 0.0}}) == 0.0);
    CHECK(g.generators[2].max_abs_diff(ComplexMatrix{{1.0, 0.0}, {0.0, -1.0}}) == 0.0);
}

TEST_CASE("generators: N=3 contains the Gell-Mann set") {
    const auto g = sun::generators(3);
    REQUIRE(g.count() == 8);
    // W2 = diag(1,1,-2)/sqrt(3)
    const double w = 1.0 / std::sqrt(3.0);
    ComplexMatrix w2(3, 3);
    w2(0, 0) = w;
    w2(1, 1) = w;
    w2(2, 2) = -2.0 * w;
    CHECK(g.generators[7].max_abs_diff(w2) <= 1e-15);
    CHECK(g.labels[7] == "W2");

    // block ordering: U12 U13 U23 V12 V13 V23 W1 W2
    CHECK(g.labels[0] == "U12");
    CHECK(g.labels[4] == "V13");

    // Gell-Mann index map: lambda_2 = V12 = block 4, lambda_4 = U13 = block 2
    CHECK(sun::block_index_of_gellmann(1, 3) == 1);
    CHECK(sun::block_index_of_gellmann(2, 3) == 4);
    CHECK(sun::block_index_of_gellmann(3, 3) == 7);
    CHECK(sun::block_index_of_gellmann(4, 3) == 2);
    CHECK(sun::block_index_of_gellmann(5, 3) == 5);
    CHECK(sun::block_index_of_gellmann(6, 3) == 3);
    CHECK(sun::block_index_of_gellmann(7, 3) == 6);
    CHECK(sun::block_index_of_gellmann(8, 3) == 8);
    for (std::size_t i = 1; i <= 3; ++i) CHECK(sun::block_index_of_gellmann(i, 2) == i);
}

TEST_CASE("generator algebra for N in 2..5") {
    for (std::size_t N : {2, 3, 4, 5}) {
        const auto g = sun::generators(N);
        REQUIRE(g.count() == N * N - 1);
        for (std::size_t i = 0; i < g.count(); ++i) {
            CHECK(g.generators[i].is_hermitian(1e-15));
            CHECK(std::abs(g.generators[i].trace()) <= 1e-14);
            for (std::size_t j = 0; j < g.count(); ++j) {
                const double tr = (g.generators[i] * g.generators[j]).trace().real();
                CHECK(std::abs(tr - (i == j ? 2.0 : 0.0)) <= 1e-14);
            }
        }
    }
}

TEST_CASE("dephasing identities: pinching kills U and V, keeps W") {
    for (std::size_t N : {2, 3, 4}) {
        const auto g = sun::generators(N);
        auto pinched = [&](const ComplexMatrix& m) {
            ComplexMatrix out(N, N);
            for (std::size_t k = 1; k <= N; ++k) {
                const auto p = sun::projector(k, k, N);
                out += p * m * p;
            }
            return out;
        };
        const std::size_t pairs = N * (N - 1) / 2;
        for (std::size_t i = 0; i < 2 * pairs; ++i) {
            CHECK(pinched(g.generators[i]).max_abs() == 0.0);  // U and V blocks
        }
        for (std::size_t i = 2 * pairs; i < g.count(); ++i) {
            CHECK(pinched(g.generators[i]).max_abs_diff(g.generators[i]) == 0.0);  // W block
        }
    }
}

TEST_CASE("fano compose") {
    // all-zero coefficients give the maximally mixed state
    const auto mixed = fano_compose(FanoCoefficients::zeros(2, 3));
    CHECK(mixed.matrix().max_abs_diff(ComplexMatrix::identity(6) * complexd(1.0 / 6.0)) <= 1e-15);

    // only gamma_33 = 1 on two qubits: (1/4) diag(2,0,0,2)
    auto c = FanoCoefficients::zeros(2, 2);
    c.gamma_at(2, 2) = 1.0;
    const auto rho = fano_compose(c);
    ComplexMatrix expect(4, 4);
    expect(0, 0) = 0.5;
    expect(3, 3) = 0.5;
    CHECK(rho.matrix().max_abs_diff(expect) <= 1e-15);

    // non-PSD coefficients are rejected
    c.gamma_at(2, 2) = 3.0;
    CHECK_THROWS_AS(fano_compose(c), not_positive);
}

TEST_CASE("fano decompose of the maximally mixed state is zero") {
    const auto c = fano_decompose(fano_compose(FanoCoefficients::zeros(2, 3)));
    for (double v : c.alpha) CHECK(std::abs(v) <= 1e-15);
    for (double v : c.beta) CHECK(std::abs(v) <= 1e-15);
    for (double v : c.gamma) CHECK(std::abs(v) <= 1e-15);
}

TEST_CASE("fano roundtrip on random states") {
    std::mt19937_64 rng(2024);
    for (auto [dA, dB] : std::vector<std::pair<std::size_t, std::size_t>>{{2, 2}, {2, 3}, {3, 3}}) {
        for (int rep = 0; rep < 100; ++rep) {
            const auto rho = random_density(dA, dB, rng);
            const auto back = fano_compose(fano_decompose(rho));
            CHECK(back.matrix().max_abs_diff(rho.matrix()) <= 1e-12);
        }
    }
}
