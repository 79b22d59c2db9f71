#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "discordium/discord.hpp"
#include "discordium/measurement.hpp"
#include "discordium/sun.hpp"

namespace discordium {

/// chi_rho = sum_{k1 k2} (Pi_k1 x Pi_k2) rho (Pi_k1 x Pi_k2); diagonal in
/// the given product basis.
inline DensityMatrix closest_classical(const DensityMatrix& rho, const ProjectiveBasis& basisA,
                                       const ProjectiveBasis& basisB,
                                       const Tolerances& tol = {}) {
    return dephase(rho, basisA, basisB, DephaseMode::Both, tol);
}

enum class RelDiscordMode { FixedComputational, MinimizedOverProductBases };

namespace detail {

/// S of the product-basis pinching of rho, evaluated as the entropy of
/// the diagonal probabilities <va x vb| rho |va x vb>.
inline double pinched_entropy(const DensityMatrix& rho, const ProjectiveBasis& basisA,
                              const ProjectiveBasis& basisB) {
    const std::size_t dA = rho.dimA(), dB = rho.dimB();
    std::vector<double> probs;
    probs.reserve(dA * dB);
    for (const auto& va : basisA.vectors) {
        for (const auto& vb : basisB.vectors) {
            complexd acc = 0.0;
            for (std::size_t a = 0; a < dA; ++a)
                for (std::size_t b = 0; b < dB; ++b) {
                    const complexd bra = std::conj(va[a] * vb[b]);
                    if (bra == complexd(0.0)) continue;
                    for (std::size_t a2 = 0; a2 < dA; ++a2)
                        for (std::size_t b2 = 0; b2 < dB; ++b2)
                            acc += bra * rho.matrix()(a * dB + b, a2 * dB + b2) * va[a2] * vb[b2];
                }
            probs.push_back(acc.real());
        }
    }
    return entropy_of_probs(probs);
}

}  // namespace detail

/// Relative entropy of discord, S(chi_rho) - S(rho). FixedComputational
/// pinches in the computational product basis; MinimizedOverProductBases
/// minimizes over both local bases.
inline double relative_discord(const DensityMatrix& rho, RelDiscordMode mode,
                               const OptimizerConfig& cfg = {}) {
    const double s_rho = von_neumann_entropy(rho);
    if (mode == RelDiscordMode::FixedComputational) {
        const double s_chi = detail::pinched_entropy(rho, ProjectiveBasis::computational(rho.dimA()),
                                                     ProjectiveBasis::computational(rho.dimB()));
        const double d = s_chi - s_rho;
        return d < 0.0 ? 0.0 : d;
    }

    const std::size_t pa = BasisParams::pair_count(rho.dimA());
    auto f = [&](const std::vector<double>& x) {
        BasisParams bpa, bpb;
        bpa.dim = rho.dimA();
        bpa.angles.assign(x.begin(), x.begin() + pa);
        bpa.phases.assign(x.begin() + pa, x.begin() + 2 * pa);
        const std::size_t pb = BasisParams::pair_count(rho.dimB());
        bpb.dim = rho.dimB();
        bpb.angles.assign(x.begin() + 2 * pa, x.begin() + 2 * pa + pb);
        bpb.phases.assign(x.begin() + 2 * pa + pb, x.end());
        return detail::pinched_entropy(rho, basis_from_params(bpa), basis_from_params(bpb));
    };
    auto coords = detail::basis_chart(rho.dimA());
    const auto coordsB = detail::basis_chart(rho.dimB());
    coords.insert(coords.end(), coordsB.begin(), coordsB.end());
    const auto r = opt::minimize(f, coords, cfg);
    const double d = r.value - s_rho;
    return d < 0.0 ? 0.0 : d;
}

/// Named Fano coefficient with its observed value, e.g. {"alpha.1", 0.3}.
struct CoefficientViolation {
    std::string name;
    double value;
};

/// Outcome of the diagonal-and-identical check: computational-basis
/// dephasings chi_rho, rho^A, rho^B compared elementwise, plus the Fano
/// coefficients that must vanish for the X-state form.
struct ClassicalityReport {
    bool is_paper_classical_form = false;
    double max_deviation = 0.0;
    std::vector<CoefficientViolation> violated_coefficients;
    double equality_gap = 0.0;
};

/// Checks the coefficient conditions and the S(chi) = S(rho_B) + min
/// conditional entropy identity with computational bases. Supports
/// dims (2,2) and (2,3).
inline ClassicalityReport classicality_conditions(const DensityMatrix& rho,
                                                  double coefficient_tol = 1e-10,
                                                  const OptimizerConfig& cfg = {}) {
    const std::size_t dA = rho.dimA(), dB = rho.dimB();
    if (dA != 2 || (dB != 2 && dB != 3)) {
        throw unsupported_dimension("classicality check supports dims (2,2) and (2,3)");
    }
    const auto compA = ProjectiveBasis::computational(dA);
    const auto compB = ProjectiveBasis::computational(dB);

    const ComplexMatrix chi = closest_classical(rho, compA, compB).matrix();
    const ComplexMatrix depA = dephase(rho, compA, std::nullopt, DephaseMode::A).matrix();
    const ComplexMatrix depB = dephase(rho, std::nullopt, compB, DephaseMode::B).matrix();

    ClassicalityReport rep;
    rep.max_deviation = std::max({chi.max_abs_diff(depA), chi.max_abs_diff(depB),
                                  depA.max_abs_diff(depB)});

    // Coefficients required to vanish, in the paper's Pauli/Gell-Mann
    // numbering (identical to the block order on the qubit side).
    const FanoCoefficients c = fano_decompose(rho);
    auto gm_to_block = [&](std::size_t gm, std::size_t N) {
        return sun::block_index_of_gellmann(gm, N) - 1;  // 0-based
    };

    std::vector<bool> alpha_free(3, false), beta_free(dB * dB - 1, false);
    std::vector<std::vector<bool>> gamma_free(3, std::vector<bool>(dB * dB - 1, false));
    if (dB == 2) {
        alpha_free[2] = true;
        beta_free[2] = true;
        for (std::size_t i : {0, 1, 2})
            for (std::size_t j : {0, 1, 2})
                if ((i < 2) == (j < 2)) gamma_free[i][j] = true;
    } else {
        alpha_free[2] = true;
        beta_free[gm_to_block(3, 3)] = true;
        for (auto [gi, gj] : std::vector<std::pair<std::size_t, std::size_t>>{
                 {3, 3}, {3, 8}, {2, 4}, {1, 4}, {2, 5}, {1, 5}}) {
            gamma_free[gi - 1][gm_to_block(gj, 3)] = true;
        }
    }

    auto check = [&](bool free, double value, const std::string& name) {
        if (!free && std::abs(value) > coefficient_tol) {
            rep.violated_coefficients.push_back({name, value});
        }
    };
    for (std::size_t i = 0; i < c.alpha.size(); ++i) {
        check(alpha_free[i], c.alpha[i], "alpha." + std::to_string(i + 1));
    }
    for (std::size_t j = 0; j < c.beta.size(); ++j) {
        const std::size_t gm = [&] {
            for (std::size_t g = 1; g <= c.beta.size(); ++g)
                if (gm_to_block(g, dB) == j) return g;
            return j + 1;
        }();
        check(beta_free[j], c.beta[j], "beta." + std::to_string(gm));
    }
    for (std::size_t i = 0; i < c.alpha.size(); ++i)
        for (std::size_t j = 0; j < c.beta.size(); ++j) {
            const std::size_t gm = [&] {
                for (std::size_t g = 1; g <= c.beta.size(); ++g)
                    if (gm_to_block(g, dB) == j) return g;
                return j + 1;
            }();
            check(gamma_free[i][j], c.gamma_at(i, j),
                  "gamma." + std::to_string(i + 1) + "." + std::to_string(gm));
        }

    const double s_chi = entropy_of_probs([&] {
        std::vector<double> d(chi.rows());
        for (std::size_t i = 0; i < chi.rows(); ++i) d[i] = chi(i, i).real();
        return d;
    }());
    const double s_b = von_neumann_entropy(partial_trace(rho, Subsystem::B));
    const double min_cond = min_conditional_entropy(rho, Subsystem::B, cfg).value;
    rep.equality_gap = std::abs(s_chi - (s_b + min_cond));

    rep.is_paper_classical_form =
        rep.violated_coefficients.empty() && rep.max_deviation <= coefficient_tol;
    return rep;
}

}  // namespace discordium
