#pragma once

#include <stdexcept>
#include <string>

namespace cubefold {

/// Malformed input text: broken JSON, non-rectangular ASCII block, stray
/// characters at grid positions that have a fixed alphabet.
class SyntaxError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Well-formed input that violates a shape invariant: slit edge not interior,
/// disconnected dual graph, empty shape, duplicate entries.
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Instance exceeds the brute-force oracle's hard size limit.
class TooLargeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A state was reached that no consistent input can produce. Signals a bug
/// in the caller or in the search/oracle machinery, never bad user input.
class InternalInvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Reduction requested for a hole with no adjacent row or column to fold
/// onto. Cannot occur for a genuine hole of a valid polyomino.
class NotApplicableError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace cubefold
