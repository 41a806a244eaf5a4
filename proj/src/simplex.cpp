#include "copasbias/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>

namespace copasbias {

namespace {

struct Vertex {
    std::vector<double> x;
    double f;
};

bool vertex_less(const Vertex& a, const Vertex& b) { return a.f < b.f; }

}  // namespace

SimplexResult nelder_mead(const ObjectiveFn& f, std::span<const double> start,
                          std::span<const double> step, const SimplexOptions& opts) {
    const std::size_t n = start.size();
    SimplexResult result;
    result.x.assign(start.begin(), start.end());

    std::vector<Vertex> simplex(n + 1);
    int evals = 0;
    auto eval = [&](const std::vector<double>& x) {
        ++evals;
        const double v = f(std::span<const double>(x));
        return std::isnan(v) ? std::numeric_limits<double>::infinity() : v;
    };

    simplex[0].x.assign(start.begin(), start.end());
    simplex[0].f = eval(simplex[0].x);
    for (std::size_t j = 0; j < n; ++j) {
        simplex[j + 1].x = simplex[0].x;
        simplex[j + 1].x[j] += (step[j] != 0.0) ? step[j] : 1e-4;
        simplex[j + 1].f = eval(simplex[j + 1].x);
    }

    std::vector<double> centroid(n), xr(n), xe(n), xc(n);
    bool converged = false;

    while (evals < opts.max_iter) {
        std::sort(simplex.begin(), simplex.end(), vertex_less);
        const double fbest = simplex.front().f;
        const double fworst = simplex.back().f;

        const double fspread = std::fabs(fworst - fbest);
        double xspread = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            double lo = simplex[0].x[j], hi = lo;
            for (std::size_t v = 1; v <= n; ++v) {
                lo = std::min(lo, simplex[v].x[j]);
                hi = std::max(hi, simplex[v].x[j]);
            }
            xspread = std::max(xspread, (hi - lo) / (1.0 + std::fabs(simplex[0].x[j])));
        }
        if (fspread <= opts.rel_f_tol * (std::fabs(fbest) + 1.0) && xspread <= opts.x_tol) {
            converged = true;
            break;
        }

        // Centroid of all but the worst vertex.
        std::fill(centroid.begin(), centroid.end(), 0.0);
        for (std::size_t v = 0; v < n; ++v) {
            for (std::size_t j = 0; j < n; ++j) centroid[j] += simplex[v].x[j];
        }
        for (std::size_t j = 0; j < n; ++j) centroid[j] /= static_cast<double>(n);

        Vertex& worst = simplex.back();
        for (std::size_t j = 0; j < n; ++j) xr[j] = centroid[j] + (centroid[j] - worst.x[j]);
        const double fr = eval(xr);

        if (fr < simplex.front().f) {
            for (std::size_t j = 0; j < n; ++j) xe[j] = centroid[j] + 2.0 * (xr[j] - centroid[j]);
            const double fe = eval(xe);
            if (fe < fr) {
                worst.x = xe;
                worst.f = fe;
            } else {
                worst.x = xr;
                worst.f = fr;
            }
        } else if (fr < simplex[n - 1].f) {
            worst.x = xr;
            worst.f = fr;
        } else {
            const bool outside = fr < worst.f;
            const std::vector<double>& base = outside ? xr : worst.x;
            for (std::size_t j = 0; j < n; ++j) xc[j] = centroid[j] + 0.5 * (base[j] - centroid[j]);
            const double fc = eval(xc);
            if (fc < (outside ? fr : worst.f)) {
                worst.x = xc;
                worst.f = fc;
            } else {
                // Shrink toward the best vertex.
                for (std::size_t v = 1; v <= n; ++v) {
                    for (std::size_t j = 0; j < n; ++j) {
                        simplex[v].x[j] = simplex[0].x[j] + 0.5 * (simplex[v].x[j] - simplex[0].x[j]);
                    }
                    simplex[v].f = eval(simplex[v].x);
                }
            }
        }
    }

    std::sort(simplex.begin(), simplex.end(), vertex_less);
    result.x = simplex.front().x;
    result.f = simplex.front().f;
    result.evaluations = evals;
    result.converged = converged;
    return result;
}

SimplexResult minimize_with_restarts(const ObjectiveFn& f, std::span<const double> start,
                                     std::span<const double> step, const SimplexOptions& opts) {
    SimplexResult best = nelder_mead(f, start, step, opts);
    const std::size_t n = start.size();

    for (int r = 1; r <= opts.restarts; ++r) {
        std::vector<double> perturbed = best.x;
        for (std::size_t j = 0; j < n; ++j) {
            const double sign = ((r + static_cast<int>(j)) % 2 == 0) ? 1.0 : -1.0;
            perturbed[j] += sign * 0.2 * (std::fabs(perturbed[j]) + std::fabs(step[j]));
        }
        SimplexResult run = nelder_mead(f, perturbed, step, opts);
        const bool improved = run.f < best.f - 1e-9 * (std::fabs(best.f) + 1.0);
        if (run.f < best.f) {
            run.evaluations += best.evaluations;
            run.converged = run.converged || best.converged;
            best = std::move(run);
        } else {
            best.evaluations += run.evaluations;
            best.converged = best.converged || run.converged;
        }
        if (!improved) break;
    }
    return best;
}

}  // namespace copasbias
