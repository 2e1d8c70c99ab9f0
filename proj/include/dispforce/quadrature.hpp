#pragma once

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>

#include "dispforce/errors.hpp"

namespace dispforce::quad {

struct Result {
    double value = 0.0;
    double error = 0.0;  // quadrature error estimate, absolute
};

// Adaptive Gauss-Kronrod (G7K15) on a finite interval.
template <class F>
Result integrate(const F& f, double a, double b, double rel_tol = 1e-9,
                 unsigned max_depth = 15) {
    Result res;
    res.value = boost::math::quadrature::gauss_kronrod<double, 15>::integrate(
        f, a, b, max_depth, rel_tol, &res.error);
    if (!std::isfinite(res.value))
        throw Error(ErrorCategory::Numeric, "quadrature produced a non-finite value");
    return res;
}

// Semi-infinite integral over [0,inf) via xi = xi_c*u/(1-u), u in [0,1).
// xi_c sets the scale where half of the mapped interval is spent.
template <class F>
Result integrate_semi_infinite(const F& f, double xi_c, double rel_tol = 1e-9,
                               unsigned max_depth = 15) {
    auto mapped = [&](double u) {
        if (u >= 1.0) return 0.0;
        const double om = 1.0 - u;
        return f(xi_c * u / om) * xi_c / (om * om);
    };
    return integrate(mapped, 0.0, 1.0, rel_tol, max_depth);
}

}  // namespace dispforce::quad
