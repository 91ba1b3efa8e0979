#pragma once

#include <stdexcept>
#include <string>

namespace domkit {

/// Invalid input: bad parameters, malformed sets, violated preconditions.
class DomainError : public std::invalid_argument {
public:
    explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

/// A computed object failed its own verification. Should never fire on valid
/// input; if it does, either the library or the underlying theory is wrong.
class ConsistencyError : public std::logic_error {
public:
    explicit ConsistencyError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace domkit
