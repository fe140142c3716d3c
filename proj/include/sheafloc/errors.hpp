#pragma once

#include <stdexcept>
#include <string>

namespace sheafloc {

/// Bad input: malformed polynomial, out-of-range parameter, arity mismatch.
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A truncated computation did not settle within the allowed number of
/// window enlargements. Carries the last two disagreeing (h0, h1) values.
class TruncationOverflow : public std::runtime_error {
public:
    TruncationOverflow(const std::string& what, long previous_h0, long previous_h1, long last_h0,
                       long last_h1)
        : std::runtime_error(what),
          previous_h0(previous_h0),
          previous_h1(previous_h1),
          last_h0(last_h0),
          last_h1(last_h1)
    {
    }

    long previous_h0;
    long previous_h1;
    long last_h0;
    long last_h1;
};

/// Internal cross-check failed (e.g. Hilbert interpolation disagrees with an
/// extra sample point).
class ConsistencyError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace sheafloc
