#pragma once

#include <stdexcept>
#include <string>

namespace hrush {

// Malformed input: unknown vertex labels, unparsable files, bad arguments.
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// A caller-side contract was not met (e.g. a base set that is not d-closed).
class PreconditionError : public std::runtime_error {
public:
    explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};

// Value outside the domain of a partial function (e.g. f^{-1} below f(1)).
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// Configuration the implementation deliberately does not handle.
class UnsupportedError : public std::runtime_error {
public:
    explicit UnsupportedError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace hrush
