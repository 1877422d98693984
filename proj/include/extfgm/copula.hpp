#pragma once

// Extended FGM copula with cubic sections,
//
//     C(u,v) = uv + a * Phi(u) * Phi(v),    Phi(u) = u(1-u)(1-bu),
//
// equivalent to C(u,v) = uv[1 + a(1-u)(1-v)(1-bu)(1-bv)] for shape b in [0,2].
// Everything here evaluates through the expanded coefficients of Phi, so the
// equivalence with the factored product form is a testable claim rather than
// an assumption baked into the evaluator.

#include <cmath>
#include <string>

#include "extfgm/errors.hpp"

namespace extfgm {

inline constexpr double kShapeMin = 0.0;
inline constexpr double kShapeMax = 2.0;

namespace detail {

inline void require_unit(double x, const char* name) {
    if (!(x >= 0.0 && x <= 1.0))
        throw DomainViolation(std::string(name) + " must lie in [0,1]");
}

inline void require_shape(double b) {
    if (!(b >= kShapeMin && b <= kShapeMax))
        throw DomainViolation("shape parameter b must lie in [0,2]");
}

} // namespace detail

// Parameter pair (a, b). The shape b is hard-constrained to [0,2]; the
// dependence parameter a only has to be finite -- admissibility is a separate
// query (validity.hpp), because the falsification features deliberately
// evaluate inadmissible parameters.
struct CopulaParams {
    double a;
    double b;

    CopulaParams(double dependence, double shape) : a(dependence), b(shape) {
        if (!std::isfinite(a))
            throw DomainViolation("dependence parameter a must be finite");
        detail::require_shape(b);
    }
};

// A point of the closed unit square.
struct UnitPoint {
    double u;
    double v;

    UnitPoint(double u_, double v_) : u(u_), v(v_) {
        detail::require_unit(u, "u");
        detail::require_unit(v, "v");
    }
};

// Phi(u) = c1*u + c2*u^2 + c3*u^3 with Phi(0) = Phi(1) = 0.
// For the family, c1 = 1, c2 = -(1+b), c3 = b.
struct PhiCubic {
    double c1;
    double c2;
    double c3;

    explicit PhiCubic(double shape_b)
        : c1(1.0), c2(-(1.0 + shape_b)), c3(shape_b) {
        detail::require_shape(shape_b);
    }

    PhiCubic(double lin, double quad, double cubic) : c1(lin), c2(quad), c3(cubic) {
        if (!(std::abs(c1 + c2 + c3) <= 1e-15))
            throw DomainViolation("PhiCubic requires Phi(1) = c1 + c2 + c3 = 0");
    }

    double value(double u) const { return ((c3 * u + c2) * u + c1) * u; }

    // Phi'(u), a quadratic.
    double slope(double u) const { return (3.0 * c3 * u + 2.0 * c2) * u + c1; }
};

inline double phi(double u, double b) {
    detail::require_unit(u, "u");
    return PhiCubic(b).value(u);
}

inline double phi_prime(double u, double b) {
    detail::require_unit(u, "u");
    return PhiCubic(b).slope(u);
}

inline double cdf(const UnitPoint& p, const CopulaParams& params) {
    const PhiCubic shape(params.b);
    // Phi(u)*Phi(v) is grouped first so symmetry in (u, v) is bit-exact.
    return p.u * p.v + params.a * (shape.value(p.u) * shape.value(p.v));
}

// Copula density c(u,v) = 1 + a Phi'(u) Phi'(v). Negative values are
// meaningful output: they certify that the parameters are not admissible.
inline double density(const UnitPoint& p, const CopulaParams& params) {
    const PhiCubic shape(params.b);
    return 1.0 + params.a * (shape.slope(p.u) * shape.slope(p.v));
}

// Conditional CDF P(V <= v | U = u) = v + a Phi'(u) Phi(v). Nondecreasing in v
// for admissible parameters, with value 0 at v=0 and 1 at v=1.
inline double conditional_v_given_u(double u, double v, const CopulaParams& params) {
    detail::require_unit(u, "u");
    detail::require_unit(v, "v");
    const PhiCubic shape(params.b);
    return v + params.a * shape.slope(u) * shape.value(v);
}

// Spearman's rho = 12 * iint C du dv - 3 = a(2-b)^2/12, using
// int_0^1 Phi = (2-b)/12.
inline double rho_closed_form(const CopulaParams& params) {
    const double w = 2.0 - params.b;
    return params.a * w * w / 12.0;
}

// Kendall's tau = 1 - 4 * iint (dC/du)(dC/dv) du dv = a(2-b)^2/18. Computed
// through rho so that tau == (2/3) * rho holds exactly in floating point.
inline double tau_closed_form(const CopulaParams& params) {
    return (2.0 / 3.0) * rho_closed_form(params);
}

struct DependenceMeasures {
    double rho;
    double tau;
};

inline DependenceMeasures closed_form_measures(const CopulaParams& params) {
    return {rho_closed_form(params), tau_closed_form(params)};
}

// Classical FGM copula uv[1 + a(1-u)(1-v)], a in [-1,1]. Kept in factored form
// as the independent b = 0 reduction oracle.
inline double fgm_reference_cdf(const UnitPoint& p, double a) {
    if (!(a >= -1.0 && a <= 1.0))
        throw DomainViolation("classical FGM requires a in [-1,1]");
    return p.u * p.v * (1.0 + a * (1.0 - p.u) * (1.0 - p.v));
}

} // namespace extfgm
