#pragma once

// Independent oracle for the half-line first moment of a Gaussian: adaptive
// Gauss-Kronrod on x * pdf(x) over [0, inf), written out without reusing the
// library's density code.

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <limits>
#include <numbers>

namespace netrank::testing {

inline double first_moment_by_quadrature(double mu, double delta) {
    using boost::math::quadrature::gauss_kronrod;
    auto integrand = [mu, delta](double x) {
        const double z = (x - mu) / delta;
        return x * std::exp(-0.5 * z * z) / (delta * std::sqrt(2.0 * std::numbers::pi));
    };
    // Split at the peak so both pieces are smooth and unimodal.
    const double peak = std::max(mu, 0.0);
    const double tol = 1e-12;
    double head = 0.0;
    if (peak > 0.0) head = gauss_kronrod<double, 61>::integrate(integrand, 0.0, peak, 20, tol);
    const double tail =
        gauss_kronrod<double, 61>::integrate(integrand, peak, std::numeric_limits<double>::infinity(), 20, tol);
    return head + tail;
}

}  // namespace netrank::testing
