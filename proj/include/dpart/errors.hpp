#pragma once

#include <stdexcept>
#include <string>

namespace dpart {

/// Thrown when a request would exceed a configured size or cell budget.
class ResourceLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Thrown by the brute-force enumerator when k is above its bound.
class BoundExceededError : public ResourceLimitError {
public:
    using ResourceLimitError::ResourceLimitError;
};

/// Thrown when a truncated product is too short for the requested x.
class InadequateTruncationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace dpart
