#pragma once

#include <stdexcept>
#include <string>

namespace cvtele {

// Input outside a documented precondition (order range, grid too small, ...).
class ConfigurationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A parameter outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// The requested numerical accuracy cannot be delivered (band limit, kernel
// wider than the grid, quadrature order too low).
class AccuracyError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Sharpening a sampled quasiprobability (sigma increasing) is ill-posed.
class UnsupportedDeconvolution : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class NotSeparableError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

}  // namespace cvtele
