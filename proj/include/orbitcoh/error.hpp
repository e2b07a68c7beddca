#pragma once

#include <stdexcept>
#include <string>

namespace orbitcoh {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// rootsys
class InvalidCartanType : public Error { using Error::Error; };
class InvalidFolding : public Error { using Error::Error; };
class UnrecognizedDiagram : public Error { using Error::Error; };
class ClosureLimitExceeded : public Error { using Error::Error; };

// catalog
class CatalogCorrupt : public Error { using Error::Error; };
class UnknownAlgebra : public Error { using Error::Error; };
class LabelLengthMismatch : public Error { using Error::Error; };
class LabelParseError : public Error { using Error::Error; };

/// A well-formed label that names no explicit record. The orbit may still
/// exist: remainder classes are counted but their labels are not enumerated.
class UnlistedLabel : public Error { using Error::Error; };

// cohomology
class InconsistentInput : public Error { using Error::Error; };

}  // namespace orbitcoh
