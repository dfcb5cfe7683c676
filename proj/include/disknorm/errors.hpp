#pragma once

#include <stdexcept>
#include <string>

namespace disknorm {

// Base class for every error this library throws.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A parameter is outside its documented range (lambda, beta, grid counts, ...).
struct BadParameter : Error {
    using Error::Error;
};

// A NaN or Inf tried to enter a public value type.
struct NonFiniteValue : Error {
    using Error::Error;
};

// Series division with vanishing constant term of the divisor.
struct DivisionByNonUnit : Error {
    using Error::Error;
};

// |f'(z)| below the degeneracy floor at an evaluation point.
struct VanishingDerivative : Error {
    using Error::Error;
};

// 1 - |omega(z)|^2 below the degeneracy floor.
struct DegenerateDilatation : Error {
    using Error::Error;
};

// A transform denominator below the degeneracy floor.
struct DegenerateDenominator : Error {
    using Error::Error;
};

// Moebius coefficients with ad - bc = 0.
struct DegenerateMobius : Error {
    using Error::Error;
};

// A Moebius composition whose denominator vanishes on the audit grid.
struct PoleInDomain : Error {
    using Error::Error;
};

// Adaptive quadrature could not reach the requested tolerance in budget.
struct QuadratureFailure : Error {
    using Error::Error;
};

// Grid specification with invalid counts or radius.
struct EmptyGrid : Error {
    using Error::Error;
};

// File I/O failure (CLI layer).
struct IoError : Error {
    using Error::Error;
};

}  // namespace disknorm
