#pragma once

#include <stdexcept>
#include <string>

namespace qqr {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct LengthMismatch : Error { using Error::Error; };
struct BudgetExceeded : Error { using Error::Error; };
struct NotPrime : Error { using Error::Error; };
struct WrongResidueClass : Error { using Error::Error; };

struct NonIntegerCoefficient : Error { using Error::Error; };
struct NegativeCoefficient : Error { using Error::Error; };
struct NotInGleasonRing : Error { using Error::Error; };
struct InsufficientKnowns : Error { using Error::Error; };
struct ValidationFailed : Error { using Error::Error; };
struct InconsistentSystem : Error { using Error::Error; };
struct SingularSystem : Error { using Error::Error; };

struct ZeroVariance : Error { using Error::Error; };
struct PreconditionFailed : Error { using Error::Error; };

struct ParseError : Error { using Error::Error; };
struct DuplicateIndex : Error { using Error::Error; };
struct MissingMetadata : Error { using Error::Error; };
struct IncompleteTable : Error { using Error::Error; };

}  // namespace qqr
