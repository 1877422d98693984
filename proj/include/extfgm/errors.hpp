#pragma once

#include <stdexcept>

namespace extfgm {

// An argument fell outside its stated domain (u outside [0,1], b outside [0,2], ...).
struct DomainViolation : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// rluf_range requires alpha < 0 < beta; other sign configurations are not supported.
struct DegenerateExtrema : std::domain_error {
    using std::domain_error::domain_error;
};

// The published range formulas divide by 1-b and have a pole at b = 1.
struct SingularAtOne : std::domain_error {
    using std::domain_error::domain_error;
};

// Sampling from parameters outside the corrected admissible range is refused.
struct InadmissibleParams : std::domain_error {
    using std::domain_error::domain_error;
};

// The conditional-CDF root finder exhausted its iteration budget. Unreachable for
// admissible parameters; if seen, it is a defect, not a user error.
struct NoConvergence : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct TooFewSamples : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

} // namespace extfgm
