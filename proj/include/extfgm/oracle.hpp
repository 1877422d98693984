#pragma once

// Brute-force verification, independent of the closed-form range logic:
// grid checks for 2-increasingness, density sign, grounded margins and the
// Frechet-Hoeffding bounds, quadrature-based rho/tau, and the live
// reproduction of both published-range counterexamples.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <vector>

#include "extfgm/copula.hpp"
#include "extfgm/quadrature.hpp"
#include "extfgm/validity.hpp"

namespace extfgm {

inline constexpr double kSignTolerance = 1e-12;     // sign checks: pass iff min >= -tol
inline constexpr double kBoundaryTolerance = 1e-13; // margins: pass iff max deviation <= tol

enum class CheckKind {
    Volume,
    DensitySign,
    Boundary,
    Frechet,
};

// Certificate of a grid scan. For Volume/DensitySign/Frechet, worst_value is
// the signed minimum and the check passes iff it is >= -tolerance; for
// Boundary it is the largest absolute margin deviation, passing iff
// <= tolerance. worst_location always lies on the evaluated grid.
struct GridReport {
    bool passed;
    double worst_value;
    double worst_u;
    double worst_v;
    int grid_n;
    CheckKind check_kind;
    double tolerance;
};

struct QuadratureResult {
    double value;
    double abs_error_estimate;
    int nodes_per_axis;
};

namespace detail {

inline void require_grid(int n) {
    if (n < 2)
        throw DomainViolation("grid resolution n must be >= 2");
}

// Uniform lattice {k/n} plus the analytic density-extremum candidates, so a
// coarse grid cannot miss the known minima.
inline std::vector<double> axis_with_candidates(double b, int n) {
    std::vector<double> axis;
    axis.reserve(static_cast<std::size_t>(n) + 4);
    for (int k = 0; k <= n; ++k)
        axis.push_back(static_cast<double>(k) / n);
    axis.push_back(0.0);
    axis.push_back(1.0);
    if (b > 0.0)
        axis.push_back(std::min((1.0 + b) / (3.0 * b), 1.0));
    return axis;
}

} // namespace detail

// C-volume of every cell of the uniform (n+1)x(n+1) lattice; 2-increasingness
// fails as soon as one cell volume drops below -kSignTolerance.
inline GridReport volume_check(const CopulaParams& params, int n) {
    detail::require_grid(n);
    const PhiCubic shape(params.b);
    const std::size_t m = static_cast<std::size_t>(n) + 1;

    std::vector<double> grid(m), phi_vals(m);
    for (std::size_t k = 0; k < m; ++k) {
        grid[k] = static_cast<double>(k) / n;
        phi_vals[k] = shape.value(grid[k]);
    }
    std::vector<double> c(m * m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            c[i * m + j] = grid[i] * grid[j] + params.a * (phi_vals[i] * phi_vals[j]);

    double worst = std::numeric_limits<double>::infinity();
    double wu = 0.0, wv = 0.0;
    for (std::size_t i = 0; i + 1 < m; ++i) {
        for (std::size_t j = 0; j + 1 < m; ++j) {
            const double volume = c[(i + 1) * m + j + 1] - c[i * m + j + 1] -
                                  c[(i + 1) * m + j] + c[i * m + j];
            if (volume < worst) {
                worst = volume;
                wu = grid[i];
                wv = grid[j];
            }
        }
    }
    return {worst >= -kSignTolerance, worst, wu, wv, n, CheckKind::Volume, kSignTolerance};
}

// Minimum of 1 + a Phi'(u) Phi'(v) over the candidate-augmented grid.
inline GridReport density_min_scan(const CopulaParams& params, int n) {
    detail::require_grid(n);
    const PhiCubic shape(params.b);
    const std::vector<double> axis = detail::axis_with_candidates(params.b, n);

    std::vector<double> slopes(axis.size());
    for (std::size_t k = 0; k < axis.size(); ++k)
        slopes[k] = shape.slope(axis[k]);

    double worst = std::numeric_limits<double>::infinity();
    double wu = 0.0, wv = 0.0;
    for (std::size_t i = 0; i < axis.size(); ++i) {
        for (std::size_t j = 0; j < axis.size(); ++j) {
            const double value = 1.0 + params.a * (slopes[i] * slopes[j]);
            if (value < worst) {
                worst = value;
                wu = axis[i];
                wv = axis[j];
            }
        }
    }
    return {worst >= -kSignTolerance, worst, wu, wv, n, CheckKind::DensitySign, kSignTolerance};
}

// Largest deviation of C(u,0), C(0,v) from 0 and of C(u,1), C(1,v) from the
// uniform margins. Holds algebraically for every a, since Phi vanishes at the
// endpoints; inadmissibility never shows up here.
inline GridReport boundary_check(const CopulaParams& params, int n) {
    detail::require_grid(n);
    double worst = -1.0;
    double wu = 0.0, wv = 0.0;
    auto consider = [&](double deviation, double u, double v) {
        deviation = std::abs(deviation);
        if (deviation > worst) {
            worst = deviation;
            wu = u;
            wv = v;
        }
    };
    for (int k = 0; k <= n; ++k) {
        const double x = static_cast<double>(k) / n;
        consider(cdf(UnitPoint(x, 0.0), params), x, 0.0);
        consider(cdf(UnitPoint(0.0, x), params), 0.0, x);
        consider(cdf(UnitPoint(x, 1.0), params) - x, x, 1.0);
        consider(cdf(UnitPoint(1.0, x), params) - x, 1.0, x);
    }
    return {worst <= kBoundaryTolerance, worst, wu, wv, n, CheckKind::Boundary, kBoundaryTolerance};
}

// Distance to the Frechet-Hoeffding envelope: min over the grid of
// min(C - max(u+v-1, 0), min(u,v) - C).
inline GridReport frechet_check(const CopulaParams& params, int n) {
    detail::require_grid(n);
    double worst = std::numeric_limits<double>::infinity();
    double wu = 0.0, wv = 0.0;
    for (int i = 0; i <= n; ++i) {
        const double u = static_cast<double>(i) / n;
        for (int j = 0; j <= n; ++j) {
            const double v = static_cast<double>(j) / n;
            const double c = cdf(UnitPoint(u, v), params);
            const double slack =
                std::min(c - std::max(u + v - 1.0, 0.0), std::min(u, v) - c);
            if (slack < worst) {
                worst = slack;
                wu = u;
                wv = v;
            }
        }
    }
    return {worst >= -kSignTolerance, worst, wu, wv, n, CheckKind::Frechet, kSignTolerance};
}

namespace detail {

inline void require_nodes(int nodes) {
    if (nodes < 8)
        throw DomainViolation("quadrature needs at least 8 nodes per axis");
}

} // namespace detail

// rho = 12 * iint C du dv - 3; the error estimate comes from doubling the rule.
inline QuadratureResult rho_numeric(const CopulaParams& params, int nodes) {
    detail::require_nodes(nodes);
    auto integrand = [&](double u, double v) { return cdf(UnitPoint(u, v), params); };
    const double coarse = 12.0 * integrate_unit_square(integrand, nodes) - 3.0;
    const double fine = 12.0 * integrate_unit_square(integrand, 2 * nodes) - 3.0;
    return {coarse, std::abs(coarse - fine), nodes};
}

// tau = 1 - 4 * iint (dC/du)(dC/dv) du dv.
inline QuadratureResult tau_numeric(const CopulaParams& params, int nodes) {
    detail::require_nodes(nodes);
    const PhiCubic shape(params.b);
    auto integrand = [&](double u, double v) {
        const double du = v + params.a * shape.slope(u) * shape.value(v);
        const double dv = u + params.a * shape.value(u) * shape.slope(v);
        return du * dv;
    };
    const double coarse = 1.0 - 4.0 * integrate_unit_square(integrand, nodes);
    const double fine = 1.0 - 4.0 * integrate_unit_square(integrand, 2 * nodes);
    return {coarse, std::abs(coarse - fine), nodes};
}

// --- falsification of the published ranges ---------------------------------

inline constexpr int kCertificationGrid = 1000;
inline constexpr int kDefaultQuadNodes = 16;

// Case (i): at b = 1.1 the min-form range is [-1, -10], i.e. empty, while the
// corrected range is not.
struct EmptyRangeFalsification {
    double b;
    AdmissibleRange published;
    AdmissibleRange corrected;
    GridReport corrected_upper_scan; // density scan at the corrected upper bound
    bool confirmed;
};

// Case (ii): the online-form range at b = 0.9 admits a = 10, for which the
// formal Spearman rho exceeds 1 and the density goes negative.
struct RhoBoundFalsification {
    double a;
    double b;
    AdmissibleRange published;
    AdmissibleRange corrected;
    double rho_formal;
    double tau_formal;
    QuadratureResult rho_quadrature;
    GridReport density;
    bool confirmed;
};

struct FalsificationReport {
    EmptyRangeFalsification empty_range;
    RhoBoundFalsification rho_exceeds_one;
    bool all_confirmed;
};

// Both counterexamples recomputed live; nothing here stores expected values.
inline FalsificationReport falsify_published_ranges() {
    EmptyRangeFalsification first{
        1.1,
        ebaid_range(1.1, EbaidVariant::MinForm),
        corrected_range(1.1),
        {},
        false,
    };
    first.corrected_upper_scan =
        density_min_scan(CopulaParams(first.corrected.upper, first.b), kCertificationGrid);
    first.confirmed = first.published.empty && !first.corrected.empty &&
                      first.corrected_upper_scan.passed;

    const CopulaParams outlier(10.0, 0.9);
    RhoBoundFalsification second{
        outlier.a,
        outlier.b,
        ebaid_range(outlier.b, EbaidVariant::OnlineForm),
        corrected_range(outlier.b),
        rho_closed_form(outlier),
        tau_closed_form(outlier),
        rho_numeric(outlier, kDefaultQuadNodes),
        density_min_scan(outlier, kCertificationGrid),
        false,
    };
    second.confirmed = second.published.contains(outlier.a) && second.rho_formal > 1.0 &&
                       !second.density.passed && outlier.a > second.corrected.upper;

    return {first, second, first.confirmed && second.confirmed};
}

} // namespace extfgm
