#pragma once

#include <stdexcept>
#include <string>

namespace fhtw {

/// Malformed input or a violated precondition.
class InvalidArgument : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// A vertex or variable name that the host object does not know.
class UnknownVertex : public InvalidArgument {
  public:
    explicit UnknownVertex(const std::string& name) : InvalidArgument("unknown vertex: " + name) {}
};

/// An exhaustive routine refused to run because its input exceeds a configured cap.
class ResourceLimit : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Broken internal invariant (never expected on valid input).
class InternalError : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

} // namespace fhtw
