#include "dispforce/fitting.hpp"

#include <cmath>
#include <cstddef>

#include "dispforce/errors.hpp"

namespace dispforce::fitting {

namespace {

// Gaussian elimination with partial pivoting; A is n x n, overwritten.
bool solve_dense(std::vector<std::vector<double>>& A, std::vector<double>& b) {
    const std::size_t n = b.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (std::fabs(A[r][col]) > std::fabs(A[piv][col])) piv = r;
        if (std::fabs(A[piv][col]) < 1e-300) return false;
        std::swap(A[piv], A[col]);
        std::swap(b[piv], b[col]);
        for (std::size_t r = col + 1; r < n; ++r) {
            const double m = A[r][col] / A[col][col];
            for (std::size_t k = col; k < n; ++k) A[r][k] -= m * A[col][k];
            b[r] -= m * b[col];
        }
    }
    for (std::size_t i = n; i-- > 0;) {
        double s = b[i];
        for (std::size_t k = i + 1; k < n; ++k) s -= A[i][k] * b[k];
        b[i] = s / A[i][i];
    }
    return true;
}

double sum_sq(const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s += x * x;
    return s;
}

}  // namespace

LmResult lm_fit(const ResidualFn& fn, std::vector<double> p, std::size_t n_residuals,
                const LmOptions& opts) {
    const std::size_t np = p.size();
    std::vector<double> r(n_residuals);
    std::vector<std::vector<double>> J(n_residuals, std::vector<double>(np));

    fn(p, r, J);
    double chi2 = sum_sq(r);
    double lambda = opts.lambda0;

    LmResult out;
    for (int iter = 0; iter < opts.max_iterations; ++iter) {
        out.iterations = iter + 1;

        // normal equations  (J^T J + lambda diag) step = -J^T r
        std::vector<std::vector<double>> JtJ(np, std::vector<double>(np, 0.0));
        std::vector<double> g(np, 0.0);
        for (std::size_t i = 0; i < n_residuals; ++i)
            for (std::size_t a = 0; a < np; ++a) {
                g[a] += J[i][a] * r[i];
                for (std::size_t b = a; b < np; ++b) JtJ[a][b] += J[i][a] * J[i][b];
            }
        for (std::size_t a = 0; a < np; ++a)
            for (std::size_t b = 0; b < a; ++b) JtJ[a][b] = JtJ[b][a];

        double gmax = 0.0;
        for (double x : g) gmax = std::max(gmax, std::fabs(x));
        if (gmax < opts.gradient_tol) {
            out.converged = true;
            break;
        }

        auto A = JtJ;
        for (std::size_t a = 0; a < np; ++a)
            A[a][a] += lambda * std::max(JtJ[a][a], 1e-30);
        std::vector<double> step(np);
        for (std::size_t a = 0; a < np; ++a) step[a] = -g[a];
        if (!solve_dense(A, step)) {
            lambda *= 10.0;
            continue;
        }

        std::vector<double> p_try(np);
        for (std::size_t a = 0; a < np; ++a) p_try[a] = p[a] + step[a];

        std::vector<double> r_try(n_residuals);
        std::vector<std::vector<double>> J_try(n_residuals, std::vector<double>(np));
        fn(p_try, r_try, J_try);
        const double chi2_try = sum_sq(r_try);

        if (chi2_try < chi2) {
            double rel_step = 0.0;
            for (std::size_t a = 0; a < np; ++a)
                rel_step = std::max(rel_step,
                                    std::fabs(step[a]) / std::max(std::fabs(p_try[a]), 1e-30));
            p = p_try;
            r = r_try;
            J = J_try;
            chi2 = chi2_try;
            lambda = std::max(lambda * 0.1, 1e-14);
            if (rel_step < opts.step_tol) {
                out.converged = true;
                break;
            }
        } else {
            lambda *= 10.0;
            if (lambda > 1e14) break;
        }
    }

    out.params = p;
    out.rms = std::sqrt(chi2 / static_cast<double>(n_residuals));
    return out;
}

}  // namespace dispforce::fitting
