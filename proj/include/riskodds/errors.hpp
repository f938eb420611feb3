#pragma once

#include <stdexcept>

namespace riskodds {

/// Thrown when an engagement asks for k outside {1, 2}.
struct unsupported_comparisons : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Thrown when an exhaustive enumeration would exceed the desk-scale limits.
struct enumeration_limit_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Thrown when exact-rational evaluation is requested beyond the supported state space.
struct exact_mode_unavailable : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

}  // namespace riskodds
