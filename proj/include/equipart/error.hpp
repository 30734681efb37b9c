#pragma once

#include <stdexcept>
#include <string>

namespace equipart {

// Bad argument values (n < 1, q < 1, k < 1, r < 2, ...).
class InvalidArgument : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// An operation was called on an input outside its documented domain.
class PreconditionViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// A required q-partition does not exist.
class NoPartition : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// The instance is valid but the threshold formula does not apply to it.
class UnsupportedInstance : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

} // namespace equipart
