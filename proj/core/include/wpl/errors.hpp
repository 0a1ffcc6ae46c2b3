#pragma once

#include <stdexcept>
#include <string>

namespace wpl {

// Bad mathematical input: shape mismatch, invalid vertex, zero-length segment.
struct DomainError : std::invalid_argument {
    explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

// Computation refused because it exceeds a configured enumeration budget.
struct ResourceError : std::runtime_error {
    explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

// Requested quantity lies outside the implemented scope; distinct from a
// failed check.
struct ScopeError : std::runtime_error {
    explicit ScopeError(const std::string& what) : std::runtime_error(what) {}
};

// A stated precondition does not hold, e.g. the coefficient modulus is too
// small for the divided powers of an exponential.
struct PreconditionError : std::runtime_error {
    explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace wpl
