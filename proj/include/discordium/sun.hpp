#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "discordium/density.hpp"
#include "discordium/matrix.hpp"

namespace discordium {
namespace sun {

/// |j><k| with 1-based indices.
inline ComplexMatrix projector(std::size_t j, std::size_t k, std::size_t N) {
    if (j < 1 || j > N || k < 1 || k > N) {
        throw index_out_of_range("projector index outside 1..N");
    }
    ComplexMatrix m(N, N);
    m(j - 1, k - 1) = 1.0;
    return m;
}

/// Ordered SU(N) generator basis: all U_jk (j<k lexicographic), then all
/// V_jk, then W_1..W_{N-1}. For N=2 this is the Pauli set, for N=3 a
/// reordering of the Gell-Mann set (U/V/W blocks instead of interleaved).
struct GeneratorSet {
    std::size_t N = 0;
    std::vector<ComplexMatrix> generators;
    std::vector<std::string> labels;  // "U12", "V13", "W2", ...

    std::size_t count() const { return generators.size(); }
};

inline GeneratorSet generators(std::size_t N) {
    if (N < 2) throw unsupported_dimension("SU(N) generators need N >= 2");
    GeneratorSet g;
    g.N = N;
    g.generators.reserve(N * N - 1);
    for (std::size_t j = 1; j <= N; ++j) {
        for (std::size_t k = j + 1; k <= N; ++k) {
            g.generators.push_back(projector(j, k, N) + projector(k, j, N));
            g.labels.push_back("U" + std::to_string(j) + std::to_string(k));
        }
    }
    for (std::size_t j = 1; j <= N; ++j) {
        for (std::size_t k = j + 1; k <= N; ++k) {
            ComplexMatrix v = projector(j, k, N) - projector(k, j, N);
            v *= complexd(0.0, -1.0);
            g.generators.push_back(v);
            g.labels.push_back("V" + std::to_string(j) + std::to_string(k));
        }
    }
    for (std::size_t l = 1; l <= N - 1; ++l) {
        ComplexMatrix w(N, N);
        for (std::size_t i = 1; i <= l; ++i) w += projector(i, i, N);
        w -= static_cast<double>(l) * projector(l + 1, l + 1, N);
        w *= std::sqrt(2.0 / (static_cast<double>(l) * (l + 1)));
        g.generators.push_back(w);
        g.labels.push_back("W" + std::to_string(l));
    }
    return g;
}

/// Index of the Gell-Mann style "interleaved" generator numbering within
/// the U/V/W block ordering above (both 1-based). For N=2 the orderings
/// coincide; for N=3 Gell-Mann lambda_2 is block index 4, etc.
inline std::size_t block_index_of_gellmann(std::size_t gm, std::size_t N) {
    const std::size_t pairs = N * (N - 1) / 2;
    // Gell-Mann ordering walks k = 2..N and emits U_jk, V_jk for j < k,
    // inserting W_{k-1} after finishing column k.
    std::size_t idx = 0;
    std::size_t upos = 0;  // how many U generators emitted so far
    for (std::size_t k = 2; k <= N; ++k) {
        for (std::size_t j = 1; j < k; ++j) {
            // lexicographic-(j,k) position of U_jk within the U block
            std::size_t lex = 0;
            for (std::size_t jj = 1; jj < j; ++jj) lex += N - jj;
            lex += k - j - 1;
            if (++idx == gm) return lex + 1;                  // U_jk
            if (++idx == gm) return pairs + lex + 1;          // V_jk
            (void)upos;
        }
        if (++idx == gm) return 2 * pairs + (k - 1);          // W_{k-1}
    }
    throw index_out_of_range("Gell-Mann index outside 1..N^2-1");
}

}  // namespace sun

/// Real coefficients of the SU(dA) x SU(dB) expansion, generator order as
/// in sun::generators. gamma is row-major [dA^2-1][dB^2-1].
struct FanoCoefficients {
    std::size_t dimA = 0, dimB = 0;
    std::vector<double> alpha;
    std::vector<double> beta;
    std::vector<double> gamma;

    double& gamma_at(std::size_t i, std::size_t j) { return gamma[i * (dimB * dimB - 1) + j]; }
    double gamma_at(std::size_t i, std::size_t j) const {
        return gamma[i * (dimB * dimB - 1) + j];
    }

    static FanoCoefficients zeros(std::size_t dA, std::size_t dB) {
        FanoCoefficients c;
        c.dimA = dA;
        c.dimB = dB;
        c.alpha.assign(dA * dA - 1, 0.0);
        c.beta.assign(dB * dB - 1, 0.0);
        c.gamma.assign((dA * dA - 1) * (dB * dB - 1), 0.0);
        return c;
    }
};

/// rho = (I + sum alpha_i L_i x I + sum beta_j I x L_j + sum gamma_ij
/// L_i x L_j) / (dA dB), then validated.
inline DensityMatrix fano_compose(const FanoCoefficients& c, const Tolerances& tol = {}) {
    const std::size_t dA = c.dimA, dB = c.dimB;
    if (c.alpha.size() != dA * dA - 1 || c.beta.size() != dB * dB - 1 ||
        c.gamma.size() != c.alpha.size() * c.beta.size()) {
        throw dimension_mismatch("Fano coefficient sizes do not match dimensions");
    }
    const auto ga = sun::generators(dA);
    const auto gb = sun::generators(dB);
    const ComplexMatrix iA = ComplexMatrix::identity(dA);
    const ComplexMatrix iB = ComplexMatrix::identity(dB);

    ComplexMatrix m = tensor(iA, iB);
    for (std::size_t i = 0; i < c.alpha.size(); ++i) {
        if (c.alpha[i] != 0.0) m += c.alpha[i] * tensor(ga.generators[i], iB);
    }
    for (std::size_t j = 0; j < c.beta.size(); ++j) {
        if (c.beta[j] != 0.0) m += c.beta[j] * tensor(iA, gb.generators[j]);
    }
    for (std::size_t i = 0; i < c.alpha.size(); ++i) {
        for (std::size_t j = 0; j < c.beta.size(); ++j) {
            const double g = c.gamma_at(i, j);
            if (g != 0.0) m += g * tensor(ga.generators[i], gb.generators[j]);
        }
    }
    m *= 1.0 / static_cast<double>(dA * dB);
    return validate_density(m, dA, dB, tol);
}

/// Inverse of fano_compose. Normalization follows from Tr(L_i L_j) =
/// 2 delta_ij: alpha_i = (dA/2) Tr(rho L_i x I), beta_j = (dB/2)
/// Tr(rho I x L_j), gamma_ij = (dA dB / 4) Tr(rho L_i x L_j).
inline FanoCoefficients fano_decompose(const DensityMatrix& rho) {
    const std::size_t dA = rho.dimA(), dB = rho.dimB();
    const auto ga = sun::generators(dA);
    const auto gb = sun::generators(dB);
    FanoCoefficients c = FanoCoefficients::zeros(dA, dB);
    const ComplexMatrix& m = rho.matrix();

    // Tr(rho (X x Y)) without forming the Kronecker product.
    auto pair_trace = [&](const ComplexMatrix* x, const ComplexMatrix* y) {
        complexd t = 0.0;
        for (std::size_t a = 0; a < dA; ++a)
            for (std::size_t a2 = 0; a2 < dA; ++a2) {
                const complexd xv = x ? (*x)(a2, a) : (a == a2 ? complexd(1.0) : complexd(0.0));
                if (xv == complexd(0.0)) continue;
                for (std::size_t b = 0; b < dB; ++b)
                    for (std::size_t b2 = 0; b2 < dB; ++b2) {
                        const complexd yv =
                            y ? (*y)(b2, b) : (b == b2 ? complexd(1.0) : complexd(0.0));
                        if (yv == complexd(0.0)) continue;
                        t += m(a * dB + b, a2 * dB + b2) * xv * yv;
                    }
            }
        return t.real();
    };

    for (std::size_t i = 0; i < c.alpha.size(); ++i) {
        c.alpha[i] = 0.5 * dA * pair_trace(&ga.generators[i], nullptr);
    }
    for (std::size_t j = 0; j < c.beta.size(); ++j) {
        c.beta[j] = 0.5 * dB * pair_trace(nullptr, &gb.generators[j]);
    }
    for (std::size_t i = 0; i < c.alpha.size(); ++i)
        for (std::size_t j = 0; j < c.beta.size(); ++j) {
            c.gamma_at(i, j) = 0.25 * dA * dB * pair_trace(&ga.generators[i], &gb.generators[j]);
        }
    return c;
}

}  // namespace discordium
