#pragma once

#include <functional>
#include <span>
#include <vector>

namespace copasbias {

struct SimplexOptions {
    double rel_f_tol = 1e-10;
    double x_tol = 1e-8;
    int max_iter = 2000;
    int restarts = 3;  // perturbed restarts on top of the initial run
};

struct SimplexResult {
    std::vector<double> x;
    double f = 0.0;
    int evaluations = 0;
    bool converged = false;
};

using ObjectiveFn = std::function<double(std::span<const double>)>;

// Single Nelder-Mead run minimizing f from `start` with per-coordinate
// initial steps `step`.
SimplexResult nelder_mead(const ObjectiveFn& f, std::span<const double> start,
                          std::span<const double> step, const SimplexOptions& opts = {});

// Nelder-Mead plus up to opts.restarts restarts from +-20% perturbations of
// the incumbent. A restart that fails to improve the incumbent ends the
// sequence early.
SimplexResult minimize_with_restarts(const ObjectiveFn& f, std::span<const double> start,
                                     std::span<const double> step,
                                     const SimplexOptions& opts = {});

}  // namespace copasbias
