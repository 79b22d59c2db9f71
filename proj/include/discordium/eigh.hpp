#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "discordium/matrix.hpp"

namespace discordium {

/// Full spectral decomposition of a Hermitian matrix. Eigenvalues
/// ascending; eigenvectors() column k pairs with eigenvalues()[k].
struct Spectrum {
    std::vector<double> eigenvalues;
    ComplexMatrix eigenvectors;

    ComplexMatrix reconstruct() const {
        const std::size_t n = eigenvalues.size();
        ComplexMatrix d(n, n);
        for (std::size_t i = 0; i < n; ++i) d(i, i) = eigenvalues[i];
        return eigenvectors * d * eigenvectors.dagger();
    }
};

/// Cyclic two-sided Jacobi eigensolver for complex Hermitian matrices.
/// The matrices here never exceed ~16x16, so simplicity and accuracy win
/// over asymptotics.
inline Spectrum eigh(const ComplexMatrix& m, double herm_tol = 1e-10) {
    if (!m.square()) throw dimension_mismatch("eigh requires a square matrix");
    if (!m.is_hermitian(herm_tol)) throw not_hermitian("eigh requires a Hermitian matrix");

    const std::size_t n = m.rows();
    ComplexMatrix a = m;
    // Symmetrize so roundoff in the input cannot leak into the rotations.
    for (std::size_t i = 0; i < n; ++i) {
        a(i, i) = complexd(a(i, i).real(), 0.0);
        for (std::size_t j = i + 1; j < n; ++j) {
            const complexd avg = 0.5 * (a(i, j) + std::conj(a(j, i)));
            a(i, j) = avg;
            a(j, i) = std::conj(avg);
        }
    }
    ComplexMatrix v = ComplexMatrix::identity(n);

    const double scale = std::max(a.max_abs(), 1e-300);
    const double off_tol = 1e-15 * scale;
    const int max_sweeps = 100;

    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) off = std::max(off, std::abs(a(p, q)));
        if (off <= off_tol) break;
        if (sweep == max_sweeps - 1) {
            throw convergence_failure("Jacobi eigensolver did not converge");
        }

        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const complexd apq = a(p, q);
                const double abs_apq = std::abs(apq);
                if (abs_apq <= off_tol) continue;

                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                const complexd phase = apq / abs_apq;

                // Rotation zeroing a(p,q): t^2 + 2 tau t - 1 = 0, smaller root.
                const double tau = (app - aqq) / (2.0 * abs_apq);
                double t;
                if (tau >= 0.0) {
                    t = 1.0 / (tau + std::sqrt(1.0 + tau * tau));
                } else {
                    t = -1.0 / (-tau + std::sqrt(1.0 + tau * tau));
                }
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                const complexd sp = s * phase;  // column p mixes in e^{i phi}

                // A <- J^dag A J with J = [[c, -conj(sp)], [sp, c]] on (p,q).
                for (std::size_t k = 0; k < n; ++k) {
                    const complexd akp = a(k, p);
                    const complexd akq = a(k, q);
                    a(k, p) = c * akp + std::conj(sp) * akq;
                    a(k, q) = -sp * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const complexd apk = a(p, k);
                    const complexd aqk = a(q, k);
                    a(p, k) = c * apk + sp * aqk;
                    a(q, k) = -std::conj(sp) * apk + c * aqk;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                a(p, p) = complexd(a(p, p).real(), 0.0);
                a(q, q) = complexd(a(q, q).real(), 0.0);

                for (std::size_t k = 0; k < n; ++k) {
                    const complexd vkp = v(k, p);
                    const complexd vkq = v(k, q);
                    v(k, p) = c * vkp + std::conj(sp) * vkq;
                    v(k, q) = -sp * vkp + c * vkq;
                }
            }
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t i, std::size_t j) { return a(i, i).real() < a(j, j).real(); });

    Spectrum out;
    out.eigenvalues.resize(n);
    out.eigenvectors = ComplexMatrix(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        out.eigenvalues[j] = a(order[j], order[j]).real();
        for (std::size_t i = 0; i < n; ++i) out.eigenvectors(i, j) = v(i, order[j]);
    }
    return out;
}

}  // namespace discordium
