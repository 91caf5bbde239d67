#pragma once

#include <stdexcept>
#include <string>

namespace minkflow {

// Bad arguments: dimension mismatch, non-unit directions, non-positive steps.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Argument outside the domain where a formula or flow is defined.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// A RadialGraphSpec that violates its own invariants on the sample grid.
class SpecError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Mesh construction failed (degenerate faces, broken topology).
class ConstructionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NumericError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A closed form hit a degenerate configuration (zero denominators).
class DegenerateError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

}  // namespace minkflow
