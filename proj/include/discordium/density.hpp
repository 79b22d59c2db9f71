#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "discordium/eigh.hpp"
#include "discordium/matrix.hpp"

namespace discordium {

struct Tolerances {
    double herm = 1e-10;
    double trace = 1e-10;
    double psd = 1e-9;
    double eig = 1e-10;
    double supp = 1e-9;
};

/// Eigenvalues below this are treated as exactly zero in entropy sums,
/// so pure-state entropies come out exactly 0.
inline constexpr double kEntropyCutoff = 1e-14;

enum class Subsystem { A, B };

/// Validated bipartite quantum state. Reduced and conditional states use a
/// trivial second factor (dim 1).
class DensityMatrix {
public:
    DensityMatrix() : dimA_(0), dimB_(0) {}

    std::size_t dimA() const { return dimA_; }
    std::size_t dimB() const { return dimB_; }
    std::size_t dim() const { return dimA_ * dimB_; }
    const ComplexMatrix& matrix() const { return mat_; }

    friend DensityMatrix validate_density(const ComplexMatrix& m, std::size_t dimA,
                                          std::size_t dimB, const Tolerances& tol);

private:
    DensityMatrix(std::size_t dimA, std::size_t dimB, ComplexMatrix m)
        : dimA_(dimA), dimB_(dimB), mat_(std::move(m)) {}

    std::size_t dimA_, dimB_;
    ComplexMatrix mat_;
};

/// Checks Hermiticity, unit trace and positivity. Eigenvalues in
/// [-tol.psd, 0) are clamped to zero and the spectrum renormalized.
inline DensityMatrix validate_density(const ComplexMatrix& m, std::size_t dimA,
                                      std::size_t dimB, const Tolerances& tol = {}) {
    if (!m.square() || m.rows() != dimA * dimB) {
        throw dimension_mismatch("matrix size does not match dimA*dimB");
    }
    if (!m.is_hermitian(tol.herm)) {
        throw not_hermitian("state is not Hermitian");
    }
    const double tr = m.trace().real();
    if (std::abs(tr - 1.0) > tol.trace) {
        throw trace_not_one("state trace is " + std::to_string(tr));
    }

    Spectrum spec = eigh(m, tol.herm);
    const double min_eig = spec.eigenvalues.front();
    if (min_eig < -tol.psd) {
        throw not_positive("state has eigenvalue " + std::to_string(min_eig));
    }
    if (min_eig >= 0.0) {
        return DensityMatrix(dimA, dimB, m);
    }

    // Clamp the slightly-negative tail and renormalize.
    double sum = 0.0;
    for (auto& ev : spec.eigenvalues) {
        if (ev < 0.0) ev = 0.0;
        sum += ev;
    }
    for (auto& ev : spec.eigenvalues) ev /= sum;
    return DensityMatrix(dimA, dimB, spec.reconstruct());
}

inline DensityMatrix validate_density(const ComplexMatrix& m, const Tolerances& tol = {}) {
    return validate_density(m, m.rows(), 1, tol);
}

/// Reduced state of the kept subsystem.
inline DensityMatrix partial_trace(const DensityMatrix& rho, Subsystem keep,
                                   const Tolerances& tol = {}) {
    const std::size_t dA = rho.dimA();
    const std::size_t dB = rho.dimB();
    const ComplexMatrix& m = rho.matrix();
    if (keep == Subsystem::A) {
        ComplexMatrix r(dA, dA);
        for (std::size_t i = 0; i < dA; ++i)
            for (std::size_t j = 0; j < dA; ++j)
                for (std::size_t b = 0; b < dB; ++b) r(i, j) += m(i * dB + b, j * dB + b);
        return validate_density(r, dA, 1, tol);
    }
    ComplexMatrix r(dB, dB);
    for (std::size_t i = 0; i < dB; ++i)
        for (std::size_t j = 0; j < dB; ++j)
            for (std::size_t a = 0; a < dA; ++a) r(i, j) += m(a * dB + i, a * dB + j);
    return validate_density(r, dB, 1, tol);
}

/// Shannon entropy in bits of a (sub)probability vector, 0 log 0 = 0.
inline double entropy_of_probs(const std::vector<double>& probs) {
    double s = 0.0;
    for (double p : probs) {
        if (p > kEntropyCutoff && p < 1.0 - kEntropyCutoff) s -= p * std::log2(p);
    }
    return s < 0.0 ? 0.0 : s;
}

inline double von_neumann_entropy(const DensityMatrix& rho) {
    return entropy_of_probs(eigh(rho.matrix()).eigenvalues);
}

/// S(rho||sigma) = Tr(rho log rho - rho log sigma) in bits. Throws
/// support_violation when rho has weight outside the support of sigma.
inline double relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma,
                               const Tolerances& tol = {}) {
    if (rho.dim() != sigma.dim()) {
        throw dimension_mismatch("relative_entropy requires equal dimensions");
    }
    const Spectrum sr = eigh(rho.matrix());
    const Spectrum ss = eigh(sigma.matrix());
    const std::size_t n = rho.dim();

    double value = 0.0;
    for (double ev : sr.eigenvalues) {
        if (ev > kEntropyCutoff) value += ev * std::log2(ev);
    }
    // -Tr(rho log sigma) via sigma's eigenbasis.
    for (std::size_t j = 0; j < n; ++j) {
        // weight = <v_j| rho |v_j>
        complexd w = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            complexd rv = 0.0;
            for (std::size_t k = 0; k < n; ++k) rv += rho.matrix()(i, k) * ss.eigenvectors(k, j);
            w += std::conj(ss.eigenvectors(i, j)) * rv;
        }
        const double weight = w.real();
        const double mu = ss.eigenvalues[j];
        if (mu <= kEntropyCutoff) {
            if (weight > tol.supp) {
                throw support_violation("support of rho exceeds support of sigma");
            }
            continue;
        }
        value -= weight * std::log2(mu);
    }
    return value < 0.0 && value > -1e-12 ? 0.0 : value;
}

}  // namespace discordium
