// Error types raised by the classification library. Every precondition
// violation has its own type so callers can react per condition.

#ifndef ROOTCFG_ERRORS_HPP
#define ROOTCFG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace rootcfg {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// poly_core
class ZeroPolynomial : public Error {
 public:
  ZeroPolynomial() : Error("operation undefined for the zero polynomial") {}
};

class DivisionByZeroPoly : public Error {
 public:
  DivisionByZeroPoly() : Error("polynomial division by zero polynomial") {}
};

// sturm_engine
class DegreeTooSmall : public Error {
 public:
  DegreeTooSmall() : Error("Sturm chain requires degree >= 1") {}
};

class BadInterval : public Error {
 public:
  BadInterval() : Error("interval endpoints must satisfy a < b") {}
};

class EndpointIsRoot : public Error {
 public:
  EndpointIsRoot() : Error("interval endpoint is a root of the polynomial") {}
};

class ZeroIsRoot : public Error {
 public:
  ZeroIsRoot() : Error("0 is a root; positive-root count undefined") {}
};

// classifiers
class NotInDoubleCase : public Error {
 public:
  NotInDoubleCase() : Error("not in the double-root case (need D = 0 and nonzero gate)") {}
};

class NotSquarefree : public Error {
 public:
  NotSquarefree() : Error("polynomial has a multiple root") {}
};

class NotInTripleCase : public Error {
 public:
  NotInTripleCase() : Error("not in the triple-and-single case") {}
};

class NotInTwoDoubleCase : public Error {
 public:
  NotInTwoDoubleCase() : Error("not in a two-double-roots case") {}
};

class NotQuadruple : public Error {
 public:
  NotQuadruple() : Error("not in the quadruple-root case") {}
};

// oracle
class UnrealizableLabel : public Error {
 public:
  UnrealizableLabel() : Error("requested label cannot be realized") {}
};

// Signals a bug: exact invariants contradicted each other.
class InternalInconsistency : public Error {
 public:
  explicit InternalInconsistency(const std::string& what)
      : Error("internal inconsistency: " + what) {}
};

}  // namespace rootcfg

#endif  // ROOTCFG_ERRORS_HPP
