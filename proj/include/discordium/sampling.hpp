#pragma once

#include <random>

#include "discordium/density.hpp"
#include "discordium/xstate.hpp"

namespace discordium {

/// Random full-rank state from the Ginibre ensemble: rho = G G^dag / Tr.
inline DensityMatrix random_density(std::size_t dA, std::size_t dB, std::mt19937_64& rng,
                                    const Tolerances& tol = {}) {
    const std::size_t n = dA * dB;
    std::normal_distribution<double> gauss(0.0, 1.0);
    ComplexMatrix g(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) g(i, j) = complexd(gauss(rng), gauss(rng));
    ComplexMatrix m = g * g.dagger();
    m *= 1.0 / m.trace().real();
    return validate_density(m, dA, dB, tol);
}

/// Random valid two-qubit X-state, rejection-sampled over the surviving
/// Fano coefficients.
inline DensityMatrix random_x2_state(std::mt19937_64& rng, const Tolerances& tol = {}) {
    std::uniform_real_distribution<double> u(-0.9, 0.9);
    for (;;) {
        XState2Params p;
        p.alpha3 = u(rng);
        p.beta3 = u(rng);
        p.gamma11 = u(rng);
        p.gamma12 = u(rng);
        p.gamma21 = u(rng);
        p.gamma22 = u(rng);
        p.gamma33 = u(rng);
        try {
            return x2_state(p, tol);
        } catch (const not_positive&) {
            // outside the PSD region; draw again
        }
    }
}

/// Random valid member of the qubit-qutrit family.
inline DensityMatrix random_qq_state(std::mt19937_64& rng, QubitQutritParams* out = nullptr,
                                     const Tolerances& tol = {}) {
    std::uniform_real_distribution<double> u(-0.5, 0.5);
    for (;;) {
        QubitQutritParams p;
        p.alpha3 = u(rng);
        p.beta3 = u(rng);
        p.beta8 = u(rng);
        p.gamma33 = u(rng);
        p.gamma38 = u(rng);
        p.gamma14 = u(rng);
        p.gamma15 = u(rng);
        p.gamma24 = u(rng);
        p.gamma25 = u(rng);
        try {
            DensityMatrix rho = qubit_qutrit_state(p, tol);
            if (out) *out = p;
            return rho;
        } catch (const not_positive&) {
        }
    }
}

}  // namespace discordium
