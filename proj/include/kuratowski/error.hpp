#pragma once

#include <stdexcept>
#include <string>

namespace kuratowski {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed argument: out-of-range id, empty generator set, non-bijective map.
class InputError : public Error {
 public:
  using Error::Error;
};

/// The request exceeds a fixed size limit (table order, point count).
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// Unknown semigroup name.
class LookupError : public Error {
 public:
  using Error::Error;
};

/// A family of sets or an operator violates a required axiom.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Internal consistency failure while building a derived structure.
class ConstructionError : public Error {
 public:
  using Error::Error;
};

}  // namespace kuratowski
