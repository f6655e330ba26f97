#ifndef SGCAT_ERRORS_HPP_
#define SGCAT_ERRORS_HPP_

#include <cstddef>    // for size_t
#include <stdexcept>  // for runtime_error
#include <string>     // for string

namespace sgcat {

  //! Base of every exception thrown by the library.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  //! Malformed input file (bad JSON, missing or mistyped fields).
  class ParseError : public Error {
   public:
    using Error::Error;
  };

  //! Well-formed input that violates an algebraic law or precondition.
  class ValidationError : public Error {
   public:
    using Error::Error;
  };

  class OutOfRange : public ValidationError {
   public:
    using ValidationError::ValidationError;
  };

  class NonAssociative : public ValidationError {
   public:
    NonAssociative(std::size_t i, std::size_t j, std::size_t k)
        : ValidationError("NonAssociative(" + std::to_string(i) + ","
                          + std::to_string(j) + "," + std::to_string(k)
                          + "): (i*j)*k != i*(j*k)"),
          i(i),
          j(j),
          k(k) {}
    std::size_t i, j, k;
  };

  class EmptyGeneratorSet : public ValidationError {
   public:
    EmptyGeneratorSet() : ValidationError("EmptyGeneratorSet") {}
  };

  class EmptyLocalUnits : public ValidationError {
   public:
    EmptyLocalUnits()
        : ValidationError("EmptyLocalUnits: the semigroup has no idempotents") {}
  };

  class NotIdempotent : public ValidationError {
   public:
    explicit NotIdempotent(std::size_t e)
        : ValidationError("NotIdempotent(" + std::to_string(e) + ")"),
          element(e) {}
    std::size_t element;
  };

  class NoLocalUnits : public ValidationError {
   public:
    explicit NoLocalUnits(std::size_t s)
        : ValidationError("NoLocalUnits(" + std::to_string(s)
                          + "): no idempotents e, f with e*s*f = s"),
          element(s) {}
    std::size_t element;
  };

  class ActionAxiomViolation : public ValidationError {
   public:
    ActionAxiomViolation(std::size_t q, std::size_t s, std::size_t t)
        : ValidationError("ActionAxiomViolation(" + std::to_string(q) + ","
                          + std::to_string(s) + "," + std::to_string(t)
                          + "): (q.s).t != q.(st)"),
          q(q),
          s(s),
          t(t) {}
    std::size_t q, s, t;
  };

  class InvalidFunctor : public ValidationError {
   public:
    using ValidationError::ValidationError;
  };

  class InvalidNaturalTransformation : public ValidationError {
   public:
    using ValidationError::ValidationError;
  };

  class WitnessInvalid : public ValidationError {
   public:
    using ValidationError::ValidationError;
  };

  //! A backtracking search exhausted its node budget before deciding.
  class SearchBudgetExceeded : public Error {
   public:
    explicit SearchBudgetExceeded(std::size_t budget)
        : Error("SearchBudgetExceeded: node budget " + std::to_string(budget)
                + " exhausted"),
          budget(budget) {}
    std::size_t budget;
  };

  class SizeCapExceeded : public Error {
   public:
    SizeCapExceeded(std::size_t size, std::size_t cap)
        : Error("SizeCapExceeded: order " + std::to_string(size)
                + " exceeds cap " + std::to_string(cap)),
          size(size),
          cap(cap) {}
    std::size_t size, cap;
  };

  class UnknownElement : public Error {
   public:
    explicit UnknownElement(std::string const& selector)
        : Error("unknown element '" + selector + "'") {}
  };

  //! Broken internal invariant; never expected on valid inputs.
  class InternalError : public Error {
   public:
    using Error::Error;
  };

}  // namespace sgcat

#endif  // SGCAT_ERRORS_HPP_
