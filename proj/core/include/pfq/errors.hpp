#pragma once

#include <stdexcept>
#include <string>

namespace pfq {

/// A parameter lies outside the domain where a formula or series is defined.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A Gamma factor (or a ratio of them) is genuinely infinite.
class PoleError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// An iterative evaluation hit its budget before reaching the tolerance.
class NoConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An integrand produced a non-finite value in the interior of the domain.
class NonFiniteError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace pfq
