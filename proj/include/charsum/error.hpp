#pragma once

#include <stdexcept>
#include <string>

namespace charsum {

// Violated mathematical precondition (weight mismatch, n < |mu0|, part 1 in mu0, ...).
class precondition_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Malformed textual input (partition strings, ranges, OEIS payloads).
class parse_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Two evaluation routes disagreed, or a value that must be a non-negative
// even integer was not. Always an internal bug.
class consistency_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// The closed-form fitter exhausted its degree cap.
class fit_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// No cached or recorded response and no live transport, or the live request failed.
class network_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace charsum
