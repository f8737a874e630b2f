#pragma once

#include <stdexcept>
#include <string>

namespace balkit {

// Index or range outside the domain an operation is defined on.
class RangeError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

// Invalid parameter combination (k <= r, composite p, unknown shape, ...).
class ParameterError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Mixing elements of different quadratic fields, or a value outside a field's domain.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class DivisionByZero : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// A closed form that must be a rational integer was not. Signals a bug or a
// false identity; never expected on valid input.
class ConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Rigorous bracketing did not separate the floor within the term budget.
class UndecidedInterval : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace balkit
