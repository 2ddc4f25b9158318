#ifndef RCN_ERRORS_HPP_
#define RCN_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace rcn {

// Base class for all domain errors raised by the toolkit.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Three of the involved points are collinear where the caller promised
// general position.
struct DegenerateConfiguration : Error {
  using Error::Error;
};

struct DegenerateGeodesic : Error {
  using Error::Error;
};

// The Hill model's self-check against H(n) failed.
struct ModelInconsistent : Error {
  using Error::Error;
};

// The k-edge identity produced a non-integral or inconsistent value.
struct IdentityViolation : Error {
  using Error::Error;
};

struct DivisibilityError : Error {
  using Error::Error;
};

struct SizeMismatch : Error {
  using Error::Error;
};

struct ParseError : Error {
  using Error::Error;
};

struct GeneralPositionViolation : Error {
  using Error::Error;
};

struct ClassSizeMismatch : Error {
  using Error::Error;
};

struct NoValidDirection : Error {
  using Error::Error;
};

struct PlantingFailed : Error {
  using Error::Error;
};

struct ClassificationMismatch : Error {
  using Error::Error;
};

struct IOError : Error {
  using Error::Error;
};

}  // namespace rcn

#endif  // RCN_ERRORS_HPP_
