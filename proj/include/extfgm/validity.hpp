#pragma once

// Admissible range of the dependence parameter a.
//
// The general cubic-section bound is -1/max{alpha^2, beta^2} <= a <= -1/(alpha*beta)
// with alpha = inf Phi', beta = sup Phi' on [0,1]. For this family beta = 1 and
//
//     alpha = b - 1                  for 0 <= b < 1/2,
//     alpha = (b - b^2 - 1) / (3b)   for 1/2 <= b <= 2,
//
// which yields the corrected range -1 <= a <= 1/(1-b) resp. 3b/(b^2-b+1).
// The previously published ranges (min{1/(1-b), 2} and the online variant
// 1/(1-b)) are kept as falsification targets only.

#include <algorithm>
#include <cmath>

#include "extfgm/copula.hpp"
#include "extfgm/errors.hpp"

namespace extfgm {

struct ExtremaReport {
    double alpha;     // inf of Phi' on [0,1]
    double beta;      // sup of Phi' on [0,1]
    double arg_alpha; // where the infimum is attained
    double arg_beta;  // where the supremum is attained
};

enum class RangeKind {
    Corrected,
    RLUFGeneric,
    EbaidMinForm,
    EbaidOnlineForm,
};

enum class EbaidVariant {
    MinForm,    // -1 <= a <= min{1/(1-b), 2}
    OnlineForm, // -1 <= a <= 1/(1-b)
};

// Closed interval [lower, upper] of a-values; empty iff lower > upper.
struct AdmissibleRange {
    double lower;
    double upper;
    RangeKind kind;
    bool empty;

    bool contains(double a) const { return lower <= a && a <= upper; }
};

namespace detail {

inline AdmissibleRange make_range(double lower, double upper, RangeKind kind) {
    return {lower, upper, kind, lower > upper};
}

} // namespace detail

inline ExtremaReport extrema_closed_form(double b) {
    detail::require_shape(b);
    // Phi' is a quadratic with interior stationary point (1+b)/(3b), which
    // enters [0,1] exactly at b = 1/2; below that the minimum sits at u = 1.
    if (b < 0.5)
        return {b - 1.0, 1.0, 1.0, 0.0};
    return {(b - b * b - 1.0) / (3.0 * b), 1.0, (1.0 + b) / (3.0 * b), 0.0};
}

// Exact extrema of the quadratic Phi' on [0,1] from the candidate set
// {0, 1, stationary point}. No iteration, no tolerance.
inline ExtremaReport extrema_numeric(const PhiCubic& shape) {
    double candidates[3] = {0.0, 1.0, 0.0};
    int count = 2;
    if (shape.c3 != 0.0) {
        const double stationary = -shape.c2 / (3.0 * shape.c3);
        if (stationary > 0.0 && stationary < 1.0)
            candidates[count++] = stationary;
    }

    ExtremaReport report{shape.slope(0.0), shape.slope(0.0), 0.0, 0.0};
    for (int i = 1; i < count; ++i) {
        const double value = shape.slope(candidates[i]);
        if (value < report.alpha) {
            report.alpha = value;
            report.arg_alpha = candidates[i];
        }
        if (value > report.beta) {
            report.beta = value;
            report.arg_beta = candidates[i];
        }
    }
    return report;
}

// Generic cubic-section bound. Only the alpha < 0 < beta case is supported.
inline AdmissibleRange rluf_range(const ExtremaReport& extrema) {
    if (!(extrema.alpha < 0.0 && extrema.beta > 0.0))
        throw DegenerateExtrema("rluf_range requires alpha < 0 < beta");
    const double lower =
        -1.0 / std::max(extrema.alpha * extrema.alpha, extrema.beta * extrema.beta);
    const double upper = -1.0 / (extrema.alpha * extrema.beta);
    return detail::make_range(lower, upper, RangeKind::RLUFGeneric);
}

// Corrected admissible range, piecewise at b = 1/2. Lower bound is -1 for the
// whole family since |alpha| <= 1 = beta.
inline AdmissibleRange corrected_range(double b) {
    detail::require_shape(b);
    const double upper = b < 0.5 ? 1.0 / (1.0 - b) : 3.0 * b / (b * b - b + 1.0);
    return detail::make_range(-1.0, upper, RangeKind::Corrected);
}

// The published (incorrect) ranges, provided solely for falsification and
// comparison output. Both divide by 1-b, hence the b = 1 error.
inline AdmissibleRange ebaid_range(double b, EbaidVariant variant) {
    detail::require_shape(b);
    if (b == 1.0)
        throw SingularAtOne("published range formulas are singular at b = 1");
    const double pole = 1.0 / (1.0 - b);
    if (variant == EbaidVariant::MinForm)
        return detail::make_range(-1.0, std::min(pole, 2.0), RangeKind::EbaidMinForm);
    return detail::make_range(-1.0, pole, RangeKind::EbaidOnlineForm);
}

inline bool is_admissible(const CopulaParams& params) {
    return corrected_range(params.b).contains(params.a);
}

} // namespace extfgm
