#pragma once

#include <array>
#include <cmath>

#include "discordium/density.hpp"
#include "discordium/sun.hpp"

namespace discordium {

/// Surviving Fano coefficients of the classical-form two-qubit X-state
/// (Pauli numbering).
struct XState2Params {
    double alpha3 = 0.0;
    double beta3 = 0.0;
    double gamma11 = 0.0;
    double gamma12 = 0.0;
    double gamma21 = 0.0;
    double gamma22 = 0.0;
    double gamma33 = 0.0;
};

/// rho = (1/4)(I + a3 s3xI + b3 Ixs3 + sum g_ij s_i x s_j) restricted to
/// the X-state coefficient pattern; throws not_positive outside the PSD
/// region.
inline DensityMatrix x2_state(const XState2Params& p, const Tolerances& tol = {}) {
    FanoCoefficients c = FanoCoefficients::zeros(2, 2);
    c.alpha[2] = p.alpha3;
    c.beta[2] = p.beta3;
    c.gamma_at(0, 0) = p.gamma11;
    c.gamma_at(0, 1) = p.gamma12;
    c.gamma_at(1, 0) = p.gamma21;
    c.gamma_at(1, 1) = p.gamma22;
    c.gamma_at(2, 2) = p.gamma33;
    return fano_compose(c, tol);
}

/// Free coefficients of the qubit-qutrit family (Gell-Mann numbering on
/// the qutrit side). beta8 is carried even though the family condition
/// lists only beta3; the analytic spectrum formulas reference it.
struct QubitQutritParams {
    double alpha3 = 0.0;
    double beta3 = 0.0;
    double beta8 = 0.0;
    double gamma33 = 0.0;
    double gamma38 = 0.0;
    double gamma14 = 0.0;
    double gamma15 = 0.0;
    double gamma24 = 0.0;
    double gamma25 = 0.0;
};

/// rho = (1/6)(I2 x I3 + a3 s3 x I3 + sqrt(3)(b3 I x l3 + b8 I x l8)
///            + sum gamma_ij s_i x l_j) over the family's surviving
/// coefficients. Note the sqrt(3) on the beta block, which the generic
/// Fano codec does not carry.
inline DensityMatrix qubit_qutrit_state(const QubitQutritParams& p, const Tolerances& tol = {}) {
    const double r3 = std::sqrt(3.0);
    FanoCoefficients c = FanoCoefficients::zeros(2, 3);
    auto b = [](std::size_t gm) { return sun::block_index_of_gellmann(gm, 3) - 1; };
    c.alpha[2] = p.alpha3;
    c.beta[b(3)] = r3 * p.beta3;
    c.beta[b(8)] = r3 * p.beta8;
    c.gamma_at(2, b(3)) = p.gamma33;
    c.gamma_at(2, b(8)) = p.gamma38;
    c.gamma_at(0, b(4)) = p.gamma14;
    c.gamma_at(0, b(5)) = p.gamma15;
    c.gamma_at(1, b(4)) = p.gamma24;
    c.gamma_at(1, b(5)) = p.gamma25;
    return fano_compose(c, tol);
}

/// The published closed-form spectra of the qubit-qutrit family: Phi for
/// the computational-basis pinching, Psi for the state itself. The
/// expressions are evaluated verbatim; the matches_* flags compare them
/// against the eigensolver, which is the oracle.
struct QubitQutritSpectra {
    std::array<double, 6> phi{};
    std::array<double, 6> psi{};
    bool phi_matches = false;
    bool psi_matches = false;
    double phi_deviation = 0.0;
    double psi_deviation = 0.0;
};

inline QubitQutritSpectra qq_spectrum_analytic(const QubitQutritParams& p,
                                               double match_tol = 1e-8) {
    const double r3 = std::sqrt(3.0);
    const double a3 = p.alpha3, b3 = p.beta3, b8 = p.beta8;
    const double g33 = p.gamma33, g38 = p.gamma38;
    const double g14 = p.gamma14, g15 = p.gamma15, g24 = p.gamma24, g25 = p.gamma25;

    QubitQutritSpectra out;
    out.phi = {
        (1.0 - 2.0 * b8 + a3 - 2.0 * g38 / r3) / 6.0,
        (1.0 - 2.0 * b8 - a3 + 2.0 * g38 / r3) / 6.0,
        (1.0 + r3 * b3 + b8 - a3 - g33 - g38 / r3) / 6.0,
        (1.0 + r3 * b3 + b8 + a3 + g33 + g38 / r3) / 6.0,
        (1.0 - r3 * b3 + b8 - a3 + g33 - g38 / r3) / 6.0,
        (1.0 - r3 * b3 + b8 - a3 - g33 + g38 / r3) / 6.0,
    };

    const double rad1 = 9 * b3 * b3 + 27 * b8 * b8 + 36 * b8 * a3 + 12 * a3 * a3 +
                        12 * ((g15 + g24) * (g15 + g24) + (g14 - g25) * (g14 - g25)) +
                        3 * g33 * g33 +
                        6 * b3 * (3 * r3 * b8 + 2 * r3 * a3 + r3 * g33 - g38) -
                        6 * r3 * b8 * g38 - 4 * r3 * a3 * g38 + g38 * g38 +
                        2 * g33 * (9 * b8 + 6 * a3 - r3 * g38);
    const double rad2 = 9 * b3 * b3 + 27 * b8 * b8 - 36 * b8 * a3 + 12 * a3 * a3 +
                        12 * ((g15 - g24) * (g15 - g24) + (g14 + g25) * (g14 + g25)) +
                        3 * g33 * g33 +
                        6 * b3 * (3 * r3 * b8 - 2 * r3 * a3 - r3 * g33 + g38) +
                        6 * r3 * b8 * g38 - 4 * r3 * a3 * g38 + g38 * g38 +
                        2 * g33 * (-9 * b8 + 6 * a3 - r3 * g38);
    const double sq1 = std::sqrt(std::abs(rad1));
    const double sq2 = std::sqrt(std::abs(rad2));
    const double head12 = 6.0 + 3 * r3 * b3 - 3 * b8 + 3 * g33 + 3 * r3 * g38;
    const double head34 = 6.0 + 3 * r3 * b3 - 3 * b8 - 3 * g33 - 3 * r3 * g38;
    out.psi = {
        (head12 + r3 * sq1) / 36.0, (head12 - r3 * sq1) / 36.0,
        (head34 + r3 * sq2) / 36.0, (head34 - r3 * sq2) / 36.0,
        out.phi[4], out.phi[5],
    };

    // Numeric adjudication against the eigensolver.
    const DensityMatrix rho = qubit_qutrit_state(p);
    auto sorted = [](std::array<double, 6> v) {
        std::sort(v.begin(), v.end());
        return v;
    };
    const auto phi_s = sorted(out.phi);
    const auto psi_s = sorted(out.psi);

    std::array<double, 6> chi_eigs{};
    for (std::size_t i = 0; i < 6; ++i) chi_eigs[i] = rho.matrix()(i, i).real();
    std::sort(chi_eigs.begin(), chi_eigs.end());
    const auto rho_eigs = eigh(rho.matrix()).eigenvalues;

    for (std::size_t i = 0; i < 6; ++i) {
        out.phi_deviation = std::max(out.phi_deviation, std::abs(phi_s[i] - chi_eigs[i]));
        out.psi_deviation = std::max(out.psi_deviation, std::abs(psi_s[i] - rho_eigs[i]));
    }
    out.phi_matches = out.phi_deviation <= match_tol;
    out.psi_matches = out.psi_deviation <= match_tol;
    return out;
}

/// The worked qubit-qutrit example, basis order |00>,|01>,|02>,|10>,
/// |11>,|12>. Valid for p in [0, 1/2]; outside that range the two 2x2
/// blocks go indefinite.
inline DensityMatrix example_state(double p, const Tolerances& tol = {}) {
    if (!(p >= 0.0 && p <= 0.5)) {
        throw parameter_out_of_range("example_state requires 0 <= p <= 1/2");
    }
    ComplexMatrix m(6, 6);
    const double h = p / 2.0;
    const double q = (1.0 - 2.0 * p) / 2.0;
    m(0, 0) = h;  // |00><00|
    m(1, 1) = h;  // |01><01|
    m(4, 4) = h;  // |11><11|
    m(5, 5) = h;  // |12><12|
    m(0, 5) = h;  // |00><12|
    m(5, 0) = h;  // |12><00|
    m(2, 2) = q;  // |02><02|
    m(3, 3) = q;  // |10><10|
    m(2, 3) = q;  // |02><10|
    m(3, 2) = q;  // |10><02|
    return validate_density(m, 2, 3, tol);
}

/// Closed form for S(chi_rho) of the worked example.
inline double example_chi_entropy(double p) {
    if (!(p >= 0.0 && p <= 0.5)) {
        throw parameter_out_of_range("example_chi_entropy requires 0 <= p <= 1/2");
    }
    double s = 1.0;
    if (p > kEntropyCutoff) s -= 2.0 * p * std::log2(p);
    if (1.0 - 2.0 * p > kEntropyCutoff) s -= (1.0 - 2.0 * p) * std::log2(1.0 - 2.0 * p);
    return s;
}

/// The published discord value for the worked example. Reproduced as
/// printed; see the regression suite for how it fares against the
/// numerical optimum.
inline double example_discord_analytic(double p) {
    if (!(p >= 0.0 && p <= 0.5)) {
        throw parameter_out_of_range("example_discord_analytic requires 0 <= p <= 1/2");
    }
    return 1.0 - p;
}

}  // namespace discordium
