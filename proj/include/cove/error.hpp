#pragma once

#include <stdexcept>
#include <string>

namespace cove {

/// Base of every exception raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define COVE_DECLARE_ERROR(Name)          \
  class Name : public Error {             \
   public:                                \
    using Error::Error;                   \
  };

/// Matrix product with incompatible inner dimensions.
COVE_DECLARE_ERROR(DimensionMismatch)
/// A square matrix was required.
COVE_DECLARE_ERROR(NotSquare)
/// Requested width exceeds the context cap or a materialization limit.
COVE_DECLARE_ERROR(QubitLimitExceeded)
COVE_DECLARE_ERROR(IndexOutOfRange)
COVE_DECLARE_ERROR(DuplicateIndexes)
/// Operation targets do not fit the register, or index lists disagree in length.
COVE_DECLARE_ERROR(SizeMismatch)
/// Raised before application; the state is left untouched.
COVE_DECLARE_ERROR(NotUnitaryOperation)
COVE_DECLARE_ERROR(ValueOutOfRange)
/// set_from_unsigned on a qubit that is in superposition.
COVE_DECLARE_ERROR(NotClassicalState)
COVE_DECLARE_ERROR(Overflow)
/// Amplitude inspection on a context that was not opened for it.
COVE_DECLARE_ERROR(DebugOnlyViolation)
COVE_DECLARE_ERROR(InvalidLocation)
COVE_DECLARE_ERROR(InvalidParameter)
COVE_DECLARE_ERROR(SemanticOracleNotMaterializable)
COVE_DECLARE_ERROR(ArgumentNull)
COVE_DECLARE_ERROR(ResourceExhausted)

#undef COVE_DECLARE_ERROR

}  // namespace cove
