#pragma once

#include <cmath>
#include <numbers>
#include <vector>

#include "discordium/density.hpp"
#include "discordium/measurement.hpp"
#include "discordium/optimize.hpp"

namespace discordium {

/// All correlation quantities for one state and one measured side, plus
/// the basis attaining the classical correlation.
struct CorrelationReport {
    double mutual_information = 0.0;
    double classical_correlation = 0.0;
    double discord = 0.0;
    Subsystem side = Subsystem::B;
    BasisParams optimal_basis_params;
    std::size_t optimizer_evals = 0;
};

/// I = S(rho_A) + S(rho_B) - S(rho_AB).
inline double mutual_information(const DensityMatrix& rho) {
    return von_neumann_entropy(partial_trace(rho, Subsystem::A)) +
           von_neumann_entropy(partial_trace(rho, Subsystem::B)) - von_neumann_entropy(rho);
}

namespace detail {

/// Conditional entropy of measuring `side` in the basis given by flat
/// parameters [angles..., phases...]. Skips state validation; this is the
/// optimizer's hot path.
inline double conditional_entropy_objective(const DensityMatrix& rho, Subsystem side,
                                            const std::vector<double>& params) {
    const std::size_t d = side == Subsystem::A ? rho.dimA() : rho.dimB();
    const std::size_t pairs = BasisParams::pair_count(d);
    BasisParams p;
    p.dim = d;
    p.angles.assign(params.begin(), params.begin() + pairs);
    p.phases.assign(params.begin() + pairs, params.end());
    const ProjectiveBasis basis = basis_from_params(p);

    double s = 0.0;
    for (const auto& v : basis.vectors) {
        ComplexMatrix m = project_out(rho.matrix(), rho.dimA(), rho.dimB(), side, v);
        const double prob = m.trace().real();
        if (prob < kEntropyCutoff) continue;
        m *= 1.0 / prob;
        // m is Hermitian PSD by construction; loose tolerance absorbs roundoff
        s += prob * entropy_of_probs(eigh(m, 1e-8).eigenvalues);
    }
    return s;
}

inline std::vector<opt::Coordinate> basis_chart(std::size_t dim) {
    const std::size_t pairs = BasisParams::pair_count(dim);
    std::vector<opt::Coordinate> coords;
    for (std::size_t i = 0; i < pairs; ++i)
        coords.push_back({0.0, std::numbers::pi / 2.0, false});
    for (std::size_t i = 0; i < pairs; ++i)
        coords.push_back({0.0, 2.0 * std::numbers::pi, true});
    return coords;
}

inline BasisParams params_from_flat(std::size_t dim, const std::vector<double>& flat) {
    const std::size_t pairs = BasisParams::pair_count(dim);
    BasisParams p;
    p.dim = dim;
    p.angles.assign(flat.begin(), flat.begin() + pairs);
    p.phases.assign(flat.begin() + pairs, flat.end());
    return p;
}

}  // namespace detail

/// Minimum measured conditional entropy over rank-1 projective bases on
/// `side`, with the attaining basis parameters.
inline opt::MinimizeResult min_conditional_entropy(const DensityMatrix& rho, Subsystem side,
                                                   const OptimizerConfig& cfg = {}) {
    const std::size_t d = side == Subsystem::A ? rho.dimA() : rho.dimB();
    auto f = [&](const std::vector<double>& x) {
        return detail::conditional_entropy_objective(rho, side, x);
    };
    return opt::minimize(f, detail::basis_chart(d), cfg);
}

/// J = S(rho of the unmeasured side) - min conditional entropy.
inline std::pair<double, BasisParams> classical_correlation(const DensityMatrix& rho,
                                                            Subsystem side,
                                                            const OptimizerConfig& cfg = {}) {
    const Subsystem other = side == Subsystem::A ? Subsystem::B : Subsystem::A;
    const double s_other = von_neumann_entropy(partial_trace(rho, other));
    const auto r = min_conditional_entropy(rho, side, cfg);
    const std::size_t d = side == Subsystem::A ? rho.dimA() : rho.dimB();
    return {s_other - r.value, detail::params_from_flat(d, r.point)};
}

/// Right (side=B) or left (side=A) quantum discord, D = I - J.
inline CorrelationReport quantum_discord(const DensityMatrix& rho, Subsystem side,
                                         const OptimizerConfig& cfg = {}) {
    CorrelationReport rep;
    rep.side = side;
    rep.mutual_information = mutual_information(rho);

    const Subsystem other = side == Subsystem::A ? Subsystem::B : Subsystem::A;
    const double s_other = von_neumann_entropy(partial_trace(rho, other));
    const auto r = min_conditional_entropy(rho, side, cfg);
    const std::size_t d = side == Subsystem::A ? rho.dimA() : rho.dimB();

    rep.classical_correlation = s_other - r.value;
    rep.optimal_basis_params = detail::params_from_flat(d, r.point);
    rep.optimizer_evals = r.evaluations;
    rep.discord = rep.mutual_information - rep.classical_correlation;
    if (rep.discord < 0.0) {
        if (rep.discord < -1e-9) {
            throw error("negative discord beyond tolerance: numerics bug");
        }
        rep.discord = 0.0;
    }
    return rep;
}

/// Independent check of the optimizer: plain dense grid minimum of the
/// conditional entropy, no refinement. Monotone non-increasing in
/// grid_density.
inline double brute_force_oracle(const DensityMatrix& rho, Subsystem side, int grid_density) {
    const std::size_t d = side == Subsystem::A ? rho.dimA() : rho.dimB();
    if (d != 2 && d != 3) {
        throw unsupported_dimension("oracle supports measured dimensions 2 and 3 only");
    }
    auto f = [&](const std::vector<double>& x) {
        return detail::conditional_entropy_objective(rho, side, x);
    };
    const auto cells = opt::grid_scan(f, detail::basis_chart(d), grid_density, 1);
    return cells.front().value;
}

}  // namespace discordium
