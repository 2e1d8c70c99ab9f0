#pragma once

#include <functional>
#include <vector>

namespace dispforce::fitting {

// Residuals and the analytic Jacobian at parameter vector p.
// residual[i] = model(x_i; p) - data_i, jacobian[i][j] = d residual[i] / d p_j.
using ResidualFn =
    std::function<void(const std::vector<double>& p, std::vector<double>& residual,
                       std::vector<std::vector<double>>& jacobian)>;

struct LmOptions {
    int max_iterations = 200;
    double step_tol = 1e-12;      // relative parameter step
    double gradient_tol = 1e-14;  // max |J^T r|
    double lambda0 = 1e-3;        // initial damping
};

struct LmResult {
    std::vector<double> params;
    double rms = 0.0;  // sqrt(mean squared residual) at the solution
    int iterations = 0;
    bool converged = false;
};

// Levenberg-Marquardt with analytic Jacobian for small dense problems
// (a handful of parameters). Damping scales the diagonal of J^T J.
LmResult lm_fit(const ResidualFn& fn, std::vector<double> p0, std::size_t n_residuals,
                const LmOptions& opts = {});

}  // namespace dispforce::fitting
