#pragma once

#include <stdexcept>
#include <string>

namespace asymptotika {

/// Base class of every exception thrown by the library.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A precondition on the arguments was violated.
class domain_error : public error {
public:
    using error::error;
};

/// An iteration, quadrature or series failed to reach its accuracy target.
class numerical_error : public error {
public:
    using error::error;
};

/// Result not representable in double precision.
class overflow_error : public numerical_error {
public:
    using numerical_error::numerical_error;
};

/// Argument lies on a branch cut where the function is not defined.
class branch_error : public domain_error {
public:
    using domain_error::domain_error;
};

/// The phase of an oscillatory integral has a stationary point where none is allowed.
class stationary_point_error : public domain_error {
public:
    using domain_error::domain_error;
};

}  // namespace asymptotika
