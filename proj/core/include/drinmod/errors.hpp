// SPDX-License-Identifier: Apache-2.0
#ifndef DRINMOD_ERRORS_HPP
#define DRINMOD_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace drinmod {

/// Base class of all errors raised by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Input / construction errors.
class ParseError : public Error {
 public:
  using Error::Error;
};
class ReducibleModulus : public Error {
 public:
  using Error::Error;
};
class BadReduction : public Error {
 public:
  using Error::Error;
};

// Arithmetic preconditions.
class DivisionByZero : public Error {
 public:
  using Error::Error;
};
class DivisorZero : public Error {
 public:
  using Error::Error;
};
class SingularInput : public Error {
 public:
  using Error::Error;
};
class InseparableCase : public Error {
 public:
  using Error::Error;
};
class PrimeDividesModulus : public Error {
 public:
  using Error::Error;
};
class RankCharClash : public Error {
 public:
  using Error::Error;
};

// Pipeline-level failures.
class AssumptionViolated : public Error {
 public:
  using Error::Error;
};
class NonIntegralEntry : public Error {
 public:
  using Error::Error;
};
class VerificationFailed : public Error {
 public:
  using Error::Error;
};
class InternalInconsistency : public Error {
 public:
  using Error::Error;
};

}  // namespace drinmod

#endif
