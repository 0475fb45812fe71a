#ifndef ADSLIE_ERRORS_HPP
#define ADSLIE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace adslie {

/// Base class of all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Vector/matrix size mismatch.
struct DimensionError : Error {
  using Error::Error;
};

/// Mixed algebra/group tags or model mismatch.
struct TagError : Error {
  using Error::Error;
};

/// Invalid argument outside a tag/dimension problem.
struct ArgumentError : Error {
  using Error::Error;
};

/// A rank or eigenvalue split is ambiguous at the requested tolerance.
struct DegeneracyError : Error {
  using Error::Error;
};

/// Target point is not in the orbit slice of the base point.
struct UnreachableError : Error {
  using Error::Error;
};

/// Target lies on the wrong half of a half-slice.
struct WrongHalfError : Error {
  using Error::Error;
};

/// Iteration budget exceeded or non-finite values encountered.
struct NumericError : Error {
  using Error::Error;
};

/// A sampling constraint cannot be satisfied.
struct ConstraintError : Error {
  using Error::Error;
};

/// Operation outside the supported geometry (e.g. indefinite Gram matrix).
struct UnsupportedError : Error {
  using Error::Error;
};

/// Lower central series does not terminate.
struct NotNilpotentError : Error {
  using Error::Error;
};

/// Bad CLI invocation.
struct UsageError : Error {
  using Error::Error;
};

}  // namespace adslie

#endif
