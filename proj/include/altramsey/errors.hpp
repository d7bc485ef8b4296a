#pragma once

#include <stdexcept>
#include <string>

namespace altramsey {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// field
struct NotPrime : Error { using Error::Error; };
struct ZeroInverse : Error { using Error::Error; };

// matrix / subspace
struct ShapeMismatch : Error { using Error::Error; };
struct NotContained : Error { using Error::Error; };
struct IndexOutOfRange : Error { using Error::Error; };
struct Inconsistent : Error { using Error::Error; };

// altspace
struct NotAlternating : Error { using Error::Error; };

// hypergraph
struct NotGraph : Error { using Error::Error; };
struct TooLarge : Error { using Error::Error; };

// oracle / baer
struct BudgetExceeded : Error { using Error::Error; };
struct EvenCharacteristic : Error { using Error::Error; };

// ramsey
struct PreconditionFailed : Error { using Error::Error; };
struct DegreeTooHigh : Error { using Error::Error; };
struct ShapeViolation : Error { using Error::Error; };
struct RankLoss : Error { using Error::Error; };

// A violated internal postcondition.  Always a bug, never an input error.
struct InternalInvariantViolation : Error { using Error::Error; };

// io
struct MalformedInput : Error { using Error::Error; };

}  // namespace altramsey
