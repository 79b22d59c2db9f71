#pragma once

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <string>
#include <thread>
#include <vector>

#include "discordium/errors.hpp"

namespace discordium {

struct OptimizerConfig {
    /// Coarse grid points per angle/phase; scaled down automatically for
    /// higher-dimensional charts (see effective_grid_density).
    int coarse_grid_points_per_angle = 24;
    int refinement_iterations = 200;
    double refinement_tolerance = 1e-9;
    int restarts = 8;

    void check() const {
        if (coarse_grid_points_per_angle < 1 || refinement_iterations < 1 || restarts < 1 ||
            refinement_tolerance <= 0.0) {
            throw parameter_out_of_range("invalid optimizer configuration");
        }
    }
};

namespace opt {

using Objective = std::function<double(const std::vector<double>&)>;

/// One coordinate of the search box. Periodic coordinates (phases) omit
/// the upper endpoint from the grid; closed ones (angles) include both.
struct Coordinate {
    double lo = 0.0;
    double hi = 1.0;
    bool periodic = false;
};

struct MinimizeResult {
    double value = 0.0;
    std::vector<double> point;
    std::size_t evaluations = 0;
};

/// Keeps the density manageable as the chart dimension grows; qubit
/// measurements keep the configured default, qutrit-side and product-basis
/// searches drop it so the coarse stage stays under a second.
inline int effective_grid_density(int configured, std::size_t nparams) {
    if (nparams <= 2) return configured;
    if (nparams <= 4) return std::min(configured, 12);
    if (nparams <= 6) return std::min(configured, 8);
    return std::min(configured, 6);
}

/// Thread cap: DISCORDIUM_THREADS, 0 or unset means auto.
inline unsigned thread_count() {
    unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("DISCORDIUM_THREADS")) {
        const long v = std::atol(env);
        if (v > 0) return static_cast<unsigned>(v);
    }
    return hw;
}

inline std::vector<double> grid_point(const std::vector<Coordinate>& coords,
                                      const std::vector<int>& density, std::size_t flat) {
    std::vector<double> x(coords.size());
    for (std::size_t d = coords.size(); d-- > 0;) {
        const int n = density[d];
        const int i = static_cast<int>(flat % n);
        flat /= n;
        const auto& c = coords[d];
        if (n == 1) {
            x[d] = c.lo;
        } else if (c.periodic) {
            x[d] = c.lo + (c.hi - c.lo) * i / n;
        } else {
            x[d] = c.lo + (c.hi - c.lo) * i / (n - 1);
        }
    }
    return x;
}

struct GridCell {
    double value;
    std::size_t flat;
    bool operator<(const GridCell& o) const {
        return value != o.value ? value < o.value : flat < o.flat;
    }
};

/// Best `keep` cells of a uniform grid scan. Evaluations run in parallel
/// over contiguous index chunks; the merged result is ordered by
/// (value, flat index) so it is identical run to run.
inline std::vector<GridCell> grid_scan(const Objective& f, const std::vector<Coordinate>& coords,
                                       int points_per_coord, std::size_t keep,
                                       std::size_t* evals = nullptr) {
    std::vector<int> density(coords.size(), points_per_coord);
    std::size_t total = 1;
    for (int n : density) total *= static_cast<std::size_t>(n);

    const unsigned nthreads =
        static_cast<unsigned>(std::min<std::size_t>(thread_count(), (total + 63) / 64));
    std::vector<std::vector<GridCell>> local(nthreads);

    auto worker = [&](unsigned t) {
        const std::size_t begin = total * t / nthreads;
        const std::size_t end = total * (t + 1) / nthreads;
        auto& best = local[t];
        for (std::size_t flat = begin; flat < end; ++flat) {
            const double val = f(grid_point(coords, density, flat));
            best.push_back({val, flat});
            std::push_heap(best.begin(), best.end());
            if (best.size() > keep) {
                std::pop_heap(best.begin(), best.end());
                best.pop_back();
            }
        }
    };

    if (nthreads <= 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < nthreads; ++t) pool.emplace_back(worker, t);
        for (auto& th : pool) th.join();
    }

    std::vector<GridCell> merged;
    for (auto& l : local) merged.insert(merged.end(), l.begin(), l.end());
    std::sort(merged.begin(), merged.end());
    if (merged.size() > keep) merged.resize(keep);
    if (evals) *evals += total;
    return merged;
}

/// Plain Nelder-Mead simplex refinement. Unbounded: the objectives here
/// are smooth periodic functions of angles, so wandering past the box is
/// harmless.
inline MinimizeResult nelder_mead(const Objective& f, const std::vector<double>& x0,
                                  double step, int max_iter, double ftol) {
    const std::size_t n = x0.size();
    std::vector<std::vector<double>> simplex(n + 1, x0);
    for (std::size_t i = 0; i < n; ++i) simplex[i + 1][i] += step;

    std::size_t evals = 0;
    std::vector<double> fv(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        fv[i] = f(simplex[i]);
        ++evals;
    }

    std::vector<std::size_t> order(n + 1);
    auto sort_simplex = [&] {
        for (std::size_t i = 0; i <= n; ++i) order[i] = i;
        std::sort(order.begin(), order.end(),
                  [&](std::size_t a, std::size_t b) { return fv[a] < fv[b]; });
    };

    for (int it = 0; it < max_iter; ++it) {
        sort_simplex();
        const std::size_t lo = order[0], hi = order[n], second_hi = order[n - 1];
        if (std::abs(fv[hi] - fv[lo]) <= ftol) break;

        std::vector<double> centroid(n, 0.0);
        for (std::size_t i = 0; i <= n; ++i) {
            if (i == hi) continue;
            for (std::size_t d = 0; d < n; ++d) centroid[d] += simplex[i][d];
        }
        for (auto& c : centroid) c /= static_cast<double>(n);

        auto blend = [&](double coef) {
            std::vector<double> x(n);
            for (std::size_t d = 0; d < n; ++d)
                x[d] = centroid[d] + coef * (simplex[hi][d] - centroid[d]);
            return x;
        };

        const auto reflected = blend(-1.0);
        const double fr = f(reflected);
        ++evals;
        if (fr < fv[lo]) {
            const auto expanded = blend(-2.0);
            const double fe = f(expanded);
            ++evals;
            simplex[hi] = fe < fr ? expanded : reflected;
            fv[hi] = std::min(fe, fr);
        } else if (fr < fv[second_hi]) {
            simplex[hi] = reflected;
            fv[hi] = fr;
        } else {
            const auto contracted = blend(fr < fv[hi] ? -0.5 : 0.5);
            const double fc = f(contracted);
            ++evals;
            if (fc < std::min(fr, fv[hi])) {
                simplex[hi] = contracted;
                fv[hi] = fc;
            } else {
                for (std::size_t i = 0; i <= n; ++i) {
                    if (i == lo) continue;
                    for (std::size_t d = 0; d < n; ++d)
                        simplex[i][d] = 0.5 * (simplex[i][d] + simplex[lo][d]);
                    fv[i] = f(simplex[i]);
                    ++evals;
                }
            }
        }
    }

    sort_simplex();
    return {fv[order[0]], simplex[order[0]], evals};
}

/// Coarse grid scan followed by Nelder-Mead refinement from the best
/// `restarts` cells. Deterministic for a fixed config regardless of the
/// number of worker threads.
inline MinimizeResult minimize(const Objective& f, const std::vector<Coordinate>& coords,
                               const OptimizerConfig& cfg) {
    cfg.check();
    const int density =
        effective_grid_density(cfg.coarse_grid_points_per_angle, coords.size());
    std::size_t evals = 0;
    const auto cells = grid_scan(f, coords, density, static_cast<std::size_t>(cfg.restarts),
                                 &evals);

    std::vector<int> dens(coords.size(), density);
    MinimizeResult best;
    best.value = cells.front().value;
    best.point = grid_point(coords, dens, cells.front().flat);

    double step = 0.0;
    for (const auto& c : coords) step = std::max(step, (c.hi - c.lo) / density);
    for (const auto& cell : cells) {
        const auto start = grid_point(coords, dens, cell.flat);
        auto r = nelder_mead(f, start, 0.75 * step, cfg.refinement_iterations,
                             cfg.refinement_tolerance);
        evals += r.evaluations;
        if (r.value < best.value) {
            best.value = r.value;
            best.point = r.point;
        }
    }
    best.evaluations = evals;
    return best;
}

}  // namespace opt
}  // namespace discordium
