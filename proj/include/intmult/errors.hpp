// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace intmult {

/// Base class for every error raised by the library. The CLI maps all of
/// these to exit code 2.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class CycleError : public Error { using Error::Error; };
class ShapeError : public Error { using Error::Error; };
class FieldError : public Error { using Error::Error; };
class InvalidInterval : public Error { using Error::Error; };
class CommutativityError : public Error { using Error::Error; };
class PosetMismatch : public Error { using Error::Error; };
class MatrixConditionError : public Error { using Error::Error; };
class NotOrderPreserving : public Error { using Error::Error; };
class NotInjectiveInterval : public Error { using Error::Error; };
class NotAChain : public Error { using Error::Error; };
class NotAGrid : public Error { using Error::Error; };
class NotABipath : public Error { using Error::Error; };
class NotIntervalDecomposableRestriction : public Error { using Error::Error; };
class NotEssentiallyCovering : public Error { using Error::Error; };
class FiltrationError : public Error { using Error::Error; };
class ParseError : public Error { using Error::Error; };

} // namespace intmult
