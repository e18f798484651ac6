#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nijenhuis2d {

// Byte offsets [begin, end) into a parsed input string.
struct SourceSpan {
  std::size_t begin = 0;
  std::size_t end = 0;
};

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Errors that point at a location in user-supplied text.
class InputError : public Error {
 public:
  InputError(const std::string& message, SourceSpan span)
      : Error(message), span_(span) {}
  SourceSpan span() const noexcept { return span_; }

 private:
  SourceSpan span_;
};

class SyntaxError : public InputError {
 public:
  SyntaxError(const std::string& expected, SourceSpan span)
      : InputError("syntax error: expected " + expected, span), expected_(expected) {}
  const std::string& expected() const noexcept { return expected_; }

 private:
  std::string expected_;
};

// An input error inside one entry of a 2x2 operator; entry is 0..3 in
// row-major order.
class EntryInputError : public InputError {
 public:
  EntryInputError(int entry, const InputError& cause)
      : InputError("entry " + std::to_string(entry) + ": " + cause.what(), cause.span()),
        entry_(entry) {}
  int entry() const noexcept { return entry_; }

 private:
  int entry_;
};

class NonPolynomialDivision : public InputError {
 public:
  explicit NonPolynomialDivision(SourceSpan span)
      : InputError("division does not produce a polynomial", span) {}
};

class ZeroDenominator : public InputError {
 public:
  explicit ZeroDenominator(SourceSpan span = {})
      : InputError("denominator is identically zero", span) {}
};

class DivisionByZeroPolynomial : public Error {
 public:
  DivisionByZeroPolynomial() : Error("division by the zero polynomial") {}
};

class InvalidShear : public Error {
 public:
  InvalidShear() : Error("shear substitution needs a nonzero y coefficient") {}
};

class NotUnivariate : public Error {
 public:
  NotUnivariate() : Error("polynomial is not univariate") {}
};

class OrderMismatch : public Error {
 public:
  OrderMismatch() : Error("jets have different truncation orders") {}
};

class NonUnitConstantTerm : public Error {
 public:
  NonUnitConstantTerm() : Error("jet has zero constant term") {}
};

class NotMorseInY : public Error {
 public:
  explicit NotMorseInY(const std::string& why) : Error("not Morse in y: " + why) {}
};

class NotCubicInY : public Error {
 public:
  explicit NotCubicInY(const std::string& why) : Error("not a cubic singularity in y: " + why) {}
};

class UndefinedAtPoint : public Error {
 public:
  UndefinedAtPoint() : Error("denominator vanishes at the evaluation point") {}
};

class DetIndependentOfY : public Error {
 public:
  DetIndependentOfY() : Error("det has zero y-derivative; use the y-independent family") {}
};

class DiscIndependentOfY : public Error {
 public:
  DiscIndependentOfY() : Error("disc has zero y-derivative; use the y-independent family") {}
};

class OrderTooLow : public Error {
 public:
  explicit OrderTooLow(const std::string& why) : Error("order too low: " + why) {}
};

class OrderViolation : public Error {
 public:
  explicit OrderViolation(const std::string& why) : Error("order condition fails: " + why) {}
};

class DegenerateAtOrigin : public Error {
 public:
  DegenerateAtOrigin() : Error("g_y vanishes at the origin") {}
};

class DegreeTwoExcluded : public Error {
 public:
  DegreeTwoExcluded() : Error("homogeneous degree 2 is excluded") {}
};

class NotHomogeneous : public Error {
 public:
  NotHomogeneous() : Error("polynomial is not homogeneous") {}
};

class InvalidGrid : public Error {
 public:
  explicit InvalidGrid(const std::string& why) : Error("invalid grid: " + why) {}
};

class AllNodesMasked : public Error {
 public:
  AllNodesMasked() : Error("an entry denominator vanishes at every grid node") {}
};

class SingularOnGrid : public Error {
 public:
  SingularOnGrid() : Error("every interior node lies near a denominator zero") {}
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& path) : Error("cannot write " + path) {}
};

}  // namespace nijenhuis2d
