#pragma once

// Tensor-product Gauss-Legendre quadrature on the unit square. The integrands
// in this project are low-degree bivariate polynomials, so a modest rule is
// already exact up to rounding.

#include <cmath>
#include <cstddef>
#include <numbers>
#include <vector>

#include "extfgm/errors.hpp"

namespace extfgm {

// Nodes and weights on [0,1]; weights sum to 1.
struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

// Legendre nodes by Newton iteration with the usual Chebyshev initial guess.
inline QuadratureRule gauss_legendre_unit(int n) {
    if (n < 1)
        throw DomainViolation("quadrature rule needs at least one node");

    QuadratureRule rule;
    rule.nodes.resize(static_cast<std::size_t>(n));
    rule.weights.resize(static_cast<std::size_t>(n));

    const int half = (n + 1) / 2;
    for (int i = 0; i < half; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double deriv = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            // Recurrence up to P_n(x).
            double p_prev = 0.0;
            double p = 1.0;
            for (int k = 1; k <= n; ++k) {
                const double p_prev2 = p_prev;
                p_prev = p;
                p = ((2.0 * k - 1.0) * x * p_prev - (k - 1.0) * p_prev2) / k;
            }
            deriv = n * (x * p - p_prev) / (x * x - 1.0);
            const double step = p / deriv;
            x -= step;
            if (std::abs(step) < 1e-15)
                break;
        }
        // Map [-1,1] -> [0,1]; the Jacobian halves the classical weight.
        const double w = 1.0 / ((1.0 - x * x) * deriv * deriv);
        rule.nodes[static_cast<std::size_t>(i)] = 0.5 * (1.0 - x);
        rule.nodes[static_cast<std::size_t>(n - 1 - i)] = 0.5 * (1.0 + x);
        rule.weights[static_cast<std::size_t>(i)] = w;
        rule.weights[static_cast<std::size_t>(n - 1 - i)] = w;
    }
    return rule;
}

// iint_{[0,1]^2} f(x, y) dx dy with a fixed, deterministic summation order.
template <typename F>
double integrate_unit_square(F&& f, int nodes_per_axis) {
    const QuadratureRule rule = gauss_legendre_unit(nodes_per_axis);
    const std::size_t n = rule.nodes.size();
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double row = 0.0;
        for (std::size_t j = 0; j < n; ++j)
            row += rule.weights[j] * f(rule.nodes[i], rule.nodes[j]);
        total += rule.weights[i] * row;
    }
    return total;
}

} // namespace extfgm
