#pragma once

#include <cmath>
#include <optional>
#include <vector>

#include "discordium/density.hpp"
#include "discordium/matrix.hpp"

namespace discordium {

/// Chart on the set of rank-1 projective measurement bases: one
/// angle/phase pair per two-level rotation, pairs in lexicographic order.
/// Angles live in [0, pi/2], phases in [0, 2pi).
struct BasisParams {
    std::size_t dim = 0;
    std::vector<double> angles;
    std::vector<double> phases;

    static std::size_t pair_count(std::size_t dim) { return dim * (dim - 1) / 2; }

    static BasisParams computational(std::size_t dim) {
        BasisParams p;
        p.dim = dim;
        p.angles.assign(pair_count(dim), 0.0);
        p.phases.assign(pair_count(dim), 0.0);
        return p;
    }
};

/// Orthonormal set of subsystem vectors; vector k is column k of a
/// unitary, so the projectors |k><k| sum to the identity.
struct ProjectiveBasis {
    std::size_t dim = 0;
    std::vector<std::vector<complexd>> vectors;

    static ProjectiveBasis computational(std::size_t dim) {
        ProjectiveBasis b;
        b.dim = dim;
        b.vectors.assign(dim, std::vector<complexd>(dim, 0.0));
        for (std::size_t k = 0; k < dim; ++k) b.vectors[k][k] = 1.0;
        return b;
    }

    double orthonormality_error() const {
        double worst = 0.0;
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = 0; j < dim; ++j) {
                complexd dot = 0.0;
                for (std::size_t k = 0; k < dim; ++k)
                    dot += std::conj(vectors[i][k]) * vectors[j][k];
                worst = std::max(worst, std::abs(dot - (i == j ? 1.0 : 0.0)));
            }
        return worst;
    }
};

/// Columns of an ordered product of two-level rotations
/// G(i,j,theta,phi) acting on the identity. dim=2 reduces to
/// {(cos t, e^{i p} sin t), (-e^{-i p} sin t, cos t)}.
inline ProjectiveBasis basis_from_params(const BasisParams& p) {
    const std::size_t n = p.dim;
    if (p.angles.size() != BasisParams::pair_count(n) ||
        p.phases.size() != BasisParams::pair_count(n)) {
        throw dimension_mismatch("basis parameter counts do not match dim");
    }
    ComplexMatrix u = ComplexMatrix::identity(n);
    std::size_t idx = 0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j, ++idx) {
            const double c = std::cos(p.angles[idx]);
            const double s = std::sin(p.angles[idx]);
            const complexd ep = std::polar(1.0, p.phases[idx]);
            // u <- u * G(i,j): columns i and j mix.
            for (std::size_t r = 0; r < n; ++r) {
                const complexd ui = u(r, i);
                const complexd uj = u(r, j);
                u(r, i) = c * ui + s * ep * uj;
                u(r, j) = -s * std::conj(ep) * ui + c * uj;
            }
        }
    }
    ProjectiveBasis b;
    b.dim = n;
    b.vectors.assign(n, std::vector<complexd>(n));
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t r = 0; r < n; ++r) b.vectors[k][r] = u(r, k);
    return b;
}

/// One measurement outcome: probability and the post-measurement state
/// of the unmeasured side. Outcomes with probability < kEntropyCutoff
/// carry no conditional state.
struct MeasurementOutcome {
    double probability = 0.0;
    std::optional<DensityMatrix> conditional;
};

struct MeasurementEnsemble {
    Subsystem measured_side = Subsystem::B;
    ProjectiveBasis basis;
    std::vector<MeasurementOutcome> outcomes;
};

namespace detail {

/// Unnormalized conditional of the unmeasured side for outcome vector v:
/// side B gives M[a,a'] = sum_{b,b'} conj(v_b) rho[(a b),(a' b')] v_b'.
inline ComplexMatrix project_out(const ComplexMatrix& rho, std::size_t dA, std::size_t dB,
                                 Subsystem side, const std::vector<complexd>& v) {
    if (side == Subsystem::B) {
        ComplexMatrix m(dA, dA);
        for (std::size_t a = 0; a < dA; ++a)
            for (std::size_t a2 = 0; a2 < dA; ++a2) {
                complexd acc = 0.0;
                for (std::size_t b = 0; b < dB; ++b) {
                    const complexd vb = std::conj(v[b]);
                    if (vb == complexd(0.0)) continue;
                    for (std::size_t b2 = 0; b2 < dB; ++b2)
                        acc += vb * rho(a * dB + b, a2 * dB + b2) * v[b2];
                }
                m(a, a2) = acc;
            }
        return m;
    }
    ComplexMatrix m(dB, dB);
    for (std::size_t b = 0; b < dB; ++b)
        for (std::size_t b2 = 0; b2 < dB; ++b2) {
            complexd acc = 0.0;
            for (std::size_t a = 0; a < dA; ++a) {
                const complexd va = std::conj(v[a]);
                if (va == complexd(0.0)) continue;
                for (std::size_t a2 = 0; a2 < dA; ++a2)
                    acc += va * rho(a * dB + b, a2 * dB + b2) * v[a2];
            }
            m(b, b2) = acc;
        }
    return m;
}

}  // namespace detail

/// Rank-1 projective measurement of one subsystem; outcome i has
/// P_i = Tr[(Pi_i on side) rho] and conditional state Tr_side[...]/P_i.
inline MeasurementEnsemble measure_subsystem(const DensityMatrix& rho,
                                             const ProjectiveBasis& basis, Subsystem side,
                                             const Tolerances& tol = {}) {
    const std::size_t d_meas = side == Subsystem::A ? rho.dimA() : rho.dimB();
    if (basis.dim != d_meas) {
        throw dimension_mismatch("basis dimension does not match measured subsystem");
    }
    MeasurementEnsemble ens;
    ens.measured_side = side;
    ens.basis = basis;
    for (const auto& v : basis.vectors) {
        ComplexMatrix m = detail::project_out(rho.matrix(), rho.dimA(), rho.dimB(), side, v);
        MeasurementOutcome out;
        out.probability = m.trace().real();
        if (out.probability >= kEntropyCutoff) {
            m *= 1.0 / out.probability;
            out.conditional = validate_density(m, m.rows(), 1, tol);
        }
        ens.outcomes.push_back(std::move(out));
    }
    return ens;
}

enum class DephaseMode { A, B, Both };

/// rho' = sum_k (Pi_k x I) rho (Pi_k x I) for mode A; analogous for B and
/// Both. Computational bases in mode Both give the product-basis pinching.
inline DensityMatrix dephase(const DensityMatrix& rho,
                             const std::optional<ProjectiveBasis>& basisA,
                             const std::optional<ProjectiveBasis>& basisB, DephaseMode mode,
                             const Tolerances& tol = {}) {
    const std::size_t dA = rho.dimA(), dB = rho.dimB();
    if (mode != DephaseMode::B) {
        if (!basisA) throw missing_basis("dephase mode requires basis A");
        if (basisA->dim != dA) throw dimension_mismatch("basis A dimension mismatch");
    }
    if (mode != DephaseMode::A) {
        if (!basisB) throw missing_basis("dephase mode requires basis B");
        if (basisB->dim != dB) throw dimension_mismatch("basis B dimension mismatch");
    }

    const std::size_t n = dA * dB;
    auto projector_of = [](const std::vector<complexd>& v) {
        ComplexMatrix p(v.size(), v.size());
        for (std::size_t i = 0; i < v.size(); ++i)
            for (std::size_t j = 0; j < v.size(); ++j) p(i, j) = v[i] * std::conj(v[j]);
        return p;
    };

    std::vector<ComplexMatrix> terms;
    const ComplexMatrix iA = ComplexMatrix::identity(dA);
    const ComplexMatrix iB = ComplexMatrix::identity(dB);
    if (mode == DephaseMode::A) {
        for (const auto& v : basisA->vectors) terms.push_back(tensor(projector_of(v), iB));
    } else if (mode == DephaseMode::B) {
        for (const auto& v : basisB->vectors) terms.push_back(tensor(iA, projector_of(v)));
    } else {
        for (const auto& va : basisA->vectors)
            for (const auto& vb : basisB->vectors)
                terms.push_back(tensor(projector_of(va), projector_of(vb)));
    }

    ComplexMatrix out(n, n);
    for (const auto& p : terms) out += p * rho.matrix() * p;
    return validate_density(out, dA, dB, tol);
}

/// sum_i P_i S(conditional_i); zero-probability outcomes contribute 0.
inline double conditional_entropy(const MeasurementEnsemble& e) {
    double s = 0.0;
    for (const auto& out : e.outcomes) {
        if (out.conditional) s += out.probability * von_neumann_entropy(*out.conditional);
    }
    return s;
}

}  // namespace discordium
