#pragma once

#include <stdexcept>
#include <string>

namespace pclab {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A size limit (atoms, points, enumeration budget) was exceeded.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// Operands from different algebras/spaces, indices out of range, malformed partitions.
class DomainError : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A relation failed an axiom; carries the axiom name and a concrete witness.
class AxiomViolation : public Error {
 public:
  AxiomViolation(std::string axiom, std::string witness)
      : Error(axiom + " violated, witness " + witness),
        axiom_(std::move(axiom)),
        witness_(std::move(witness)) {}
  const std::string& axiom() const noexcept { return axiom_; }
  const std::string& witness() const noexcept { return witness_; }

 private:
  std::string axiom_;
  std::string witness_;
};

/// A structure failed its validator (e.g. a triple that is not a 2-precontact space).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// An object was handed to a specialization that it does not belong to.
class ClassificationError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace pclab
