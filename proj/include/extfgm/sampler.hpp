#pragma once

// Conditional-inversion sampling: draw u and t uniformly, then solve
// v + a Phi'(u) Phi(v) = t for v. Also provides the rank-based empirical
// dependence estimators used for statistical cross-validation.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <numeric>
#include <ostream>
#include <random>
#include <span>
#include <utility>
#include <vector>

#include "extfgm/copula.hpp"
#include "extfgm/errors.hpp"
#include "extfgm/validity.hpp"

namespace extfgm {

inline constexpr double kRootTolerance = 1e-12;
inline constexpr double kMinNewtonSlope = 1e-10;
inline constexpr int kMaxRootIterations = 200;

struct SampleBatch {
    CopulaParams params;
    std::uint64_t seed;
    std::vector<UnitPoint> pairs;
};

namespace detail {

// Top 53 bits of the engine output, uniform on [0,1). Done by hand so batches
// are bit-for-bit reproducible across standard libraries.
inline double unit_from_bits(std::uint64_t bits) {
    return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

// Root of g(v) = v + scale * Phi(v) - t on [0,1]. g is nondecreasing for
// admissible parameters with g(0) = -t and g(1) = 1 - t, so a bracketed root
// always exists. Newton steps are rejected whenever they leave the bracket or
// the slope (the copula density) is too flat to trust.
inline double solve_conditional_monotone(double u, double t, double a,
                                         const PhiCubic& shape) {
    const double scale = a * shape.slope(u);
    double lo = 0.0;
    double hi = 1.0;
    double v = t;
    for (int iter = 0; iter < kMaxRootIterations; ++iter) {
        const double g = v + scale * shape.value(v) - t;
        if (std::abs(g) <= kRootTolerance)
            return v;
        (g > 0.0 ? hi : lo) = v;
        const double slope = 1.0 + scale * shape.slope(v);
        double next = slope > kMinNewtonSlope ? v - g / slope : std::midpoint(lo, hi);
        if (!(next > lo && next < hi))
            next = std::midpoint(lo, hi);
        v = next;
    }
    throw NoConvergence("conditional inversion did not converge in 200 iterations");
}

} // namespace detail

// Solves conditional_v_given_u(u, v) = t for v.
inline double solve_conditional(double u, double t, const CopulaParams& params) {
    detail::require_unit(u, "u");
    detail::require_unit(t, "t");
    if (!is_admissible(params))
        throw InadmissibleParams("cannot invert the conditional CDF of a non-copula");
    return detail::solve_conditional_monotone(u, t, params.a, PhiCubic(params.b));
}

inline SampleBatch sample(const CopulaParams& params, std::size_t count,
                          std::uint64_t seed) {
    if (count < 1)
        throw DomainViolation("sample count must be >= 1");
    if (!is_admissible(params))
        throw InadmissibleParams("refusing to sample from inadmissible parameters");

    const PhiCubic shape(params.b);
    std::mt19937_64 rng(seed);
    SampleBatch batch{params, seed, {}};
    batch.pairs.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        const double u = detail::unit_from_bits(rng());
        const double t = detail::unit_from_bits(rng());
        batch.pairs.emplace_back(u, detail::solve_conditional_monotone(u, t, params.a, shape));
    }
    return batch;
}

namespace detail {

inline void require_pairs(std::size_t n) {
    if (n < 2)
        throw TooFewSamples("rank statistics need at least two pairs");
}

// 1-based ranks, ties assigned the average rank of their group.
inline std::vector<double> average_ranks(const std::vector<double>& values) {
    const std::size_t n = values.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t lhs, std::size_t rhs) { return values[lhs] < values[rhs]; });

    std::vector<double> ranks(n);
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i + 1;
        while (j < n && values[order[j]] == values[order[i]])
            ++j;
        const double shared = 0.5 * static_cast<double>(i + j - 1) + 1.0;
        for (std::size_t k = i; k < j; ++k)
            ranks[order[k]] = shared;
        i = j;
    }
    return ranks;
}

// Merge sort counting inversions (pairs out of order, strict).
inline long long sort_counting_inversions(std::vector<double>& values,
                                          std::vector<double>& buffer) {
    const std::size_t n = values.size();
    long long inversions = 0;
    for (std::size_t width = 1; width < n; width *= 2) {
        for (std::size_t left = 0; left + width < n; left += 2 * width) {
            const std::size_t mid = left + width;
            const std::size_t right = std::min(left + 2 * width, n);
            std::size_t i = left, j = mid, k = left;
            while (i < mid && j < right) {
                if (values[j] < values[i]) {
                    inversions += static_cast<long long>(mid - i);
                    buffer[k++] = values[j++];
                } else {
                    buffer[k++] = values[i++];
                }
            }
            while (i < mid)
                buffer[k++] = values[i++];
            while (j < right)
                buffer[k++] = values[j++];
            std::copy(buffer.begin() + static_cast<std::ptrdiff_t>(left),
                      buffer.begin() + static_cast<std::ptrdiff_t>(right),
                      values.begin() + static_cast<std::ptrdiff_t>(left));
        }
    }
    return inversions;
}

inline long long tied_pairs(const std::vector<double>& sorted) {
    long long total = 0;
    std::size_t i = 0;
    while (i < sorted.size()) {
        std::size_t j = i + 1;
        while (j < sorted.size() && sorted[j] == sorted[i])
            ++j;
        const long long run = static_cast<long long>(j - i);
        total += run * (run - 1) / 2;
        i = j;
    }
    return total;
}

} // namespace detail

// Spearman's rho: Pearson correlation of average ranks.
inline double empirical_rho(std::span<const UnitPoint> pairs) {
    detail::require_pairs(pairs.size());
    const std::size_t n = pairs.size();
    std::vector<double> us(n), vs(n);
    for (std::size_t i = 0; i < n; ++i) {
        us[i] = pairs[i].u;
        vs[i] = pairs[i].v;
    }
    const std::vector<double> ru = detail::average_ranks(us);
    const std::vector<double> rv = detail::average_ranks(vs);

    const double mean = 0.5 * static_cast<double>(n + 1);
    double suv = 0.0, suu = 0.0, svv = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double du = ru[i] - mean;
        const double dv = rv[i] - mean;
        suv += du * dv;
        suu += du * du;
        svv += dv * dv;
    }
    const double denom = std::sqrt(suu * svv);
    return denom == 0.0 ? 0.0 : suv / denom;
}

// Kendall's tau-b via the merge-sort concordance count, O(n log n). Agrees
// exactly with the naive pairwise count because every tally is an integer and
// the final expression is the same.
inline double empirical_tau(std::span<const UnitPoint> pairs) {
    detail::require_pairs(pairs.size());
    const std::size_t n = pairs.size();

    std::vector<std::pair<double, double>> sorted(n);
    for (std::size_t i = 0; i < n; ++i)
        sorted[i] = {pairs[i].u, pairs[i].v};
    std::sort(sorted.begin(), sorted.end());

    // Ties among u (and joint ties) from the lexicographically sorted runs.
    long long ties_u = 0, ties_joint = 0;
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i + 1;
        while (j < n && sorted[j].first == sorted[i].first)
            ++j;
        const long long run = static_cast<long long>(j - i);
        ties_u += run * (run - 1) / 2;
        std::size_t k = i;
        while (k < j) {
            std::size_t l = k + 1;
            while (l < j && sorted[l].second == sorted[k].second)
                ++l;
            const long long joint = static_cast<long long>(l - k);
            ties_joint += joint * (joint - 1) / 2;
            k = l;
        }
        i = j;
    }

    std::vector<double> vs(n), buffer(n);
    for (std::size_t k = 0; k < n; ++k)
        vs[k] = sorted[k].second;
    const long long swaps = detail::sort_counting_inversions(vs, buffer);
    const long long ties_v = detail::tied_pairs(vs);

    const long long total = static_cast<long long>(n) * (static_cast<long long>(n) - 1) / 2;
    const long long numer = total - ties_u - ties_v + ties_joint - 2 * swaps;
    const double denom = std::sqrt(static_cast<double>(total - ties_u) *
                                   static_cast<double>(total - ties_v));
    return denom == 0.0 ? 0.0 : static_cast<double>(numer) / denom;
}

inline double empirical_rho(const SampleBatch& batch) {
    return empirical_rho(std::span<const UnitPoint>(batch.pairs));
}

inline double empirical_tau(const SampleBatch& batch) {
    return empirical_tau(std::span<const UnitPoint>(batch.pairs));
}

// CSV with header "u,v", one pair per line, 17 significant digits.
inline void write_csv(std::ostream& os, const SampleBatch& batch) {
    os << "u,v\n";
    char line[64];
    for (const UnitPoint& p : batch.pairs) {
        std::snprintf(line, sizeof(line), "%.17g,%.17g\n", p.u, p.v);
        os << line;
    }
}

} // namespace extfgm
