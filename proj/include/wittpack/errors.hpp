#pragma once

#include <stdexcept>
#include <string>

namespace wittpack {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// gf
struct NotPrime : Error { using Error::Error; };
struct DegreeOutOfRange : Error { using Error::Error; };
struct ReducibleModulus : Error { using Error::Error; };
struct FieldMismatch : Error { using Error::Error; };
struct DivisionByZero : Error { using Error::Error; };
struct FieldTooLarge : Error { using Error::Error; };

// witt2
struct NonUnit : Error { using Error::Error; };
struct ExtensionFieldNotSupported : Error { using Error::Error; };

// poly
struct DuplicateAbscissa : Error { using Error::Error; };
struct ZeroPolynomial : Error { using Error::Error; };
struct DivisionByZeroPolynomial : Error { using Error::Error; };

// ec
struct PointNotOnCurve : Error { using Error::Error; };
struct SingularCurve : Error { using Error::Error; };

// lift
struct OrderDivisibleByP : Error { using Error::Error; };
struct DegenerateTransport : Error { using Error::Error; };
struct InsufficientSamples : Error { using Error::Error; };
struct ValidationFailed : Error { using Error::Error; };

// packets
struct NonUnitX : Error { using Error::Error; };
struct IdentityFailed : Error { using Error::Error; };
struct IOFailure : Error { using Error::Error; };

}  // namespace wittpack
