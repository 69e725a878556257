#pragma once

#include <stdexcept>
#include <string>

namespace qmod {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Arithmetic
class DivisionByZero : public Error { public: using Error::Error; };
class ZeroLeadingTerm : public Error { public: using Error::Error; };
class NonInvertibleLeadingCoefficient : public Error { public: using Error::Error; };
class NonUnitBase : public Error { public: using Error::Error; };

// Truncation bookkeeping: a request needs coefficients the series does not guarantee.
class InsufficientAccuracy : public Error { public: using Error::Error; };

// Constructor preconditions
class NonpositiveExponentStep : public Error { public: using Error::Error; };
class ZeroParameter : public Error { public: using Error::Error; };
class EmptySum : public Error { public: using Error::Error; };
class PoleEvaluation : public Error { public: using Error::Error; };
class UnsupportedN : public Error { public: using Error::Error; };
class DenominatorNotUnit : public Error { public: using Error::Error; };

/// An enumeration whose exponents were expected to grow monotonically did not.
class EnumerationInvariant : public Error { public: using Error::Error; };

}  // namespace qmod
