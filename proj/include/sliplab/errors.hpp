#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace sliplab {

// Base class for every error the toolkit throws on purpose.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero in GF(p)") {}
};

class NonPrimeModulus : public Error {
 public:
  explicit NonPrimeModulus(std::uint32_t n)
      : Error("modulus " + std::to_string(n) + " is not a prime in [2, 2^16]") {}
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

// Two operands live over different fields or different algebras.
class AlgebraMismatch : public Error {
 public:
  using Error::Error;
};

class NotIdempotent : public Error {
 public:
  using Error::Error;
};

class NotLeftSemicentral : public Error {
 public:
  using Error::Error;
};

class NontrivialIdempotentRequired : public Error {
 public:
  using Error::Error;
};

// An input structure failed its axiom check (associativity, unit, module laws, ...).
class ValidationFailed : public Error {
 public:
  using Error::Error;
};

class NotLip : public Error {
 public:
  using Error::Error;
};

class BlockStructureViolated : public Error {
 public:
  using Error::Error;
};

class EnumerationCapExceeded : public Error {
 public:
  EnumerationCapExceeded(const std::string& what, std::uint64_t needed, std::uint64_t cap)
      : Error(what + " (needs " + std::to_string(needed) + " points, cap " +
              std::to_string(cap) + ")"),
        needed_(needed),
        cap_(cap) {}
  std::uint64_t needed() const { return needed_; }
  std::uint64_t cap() const { return cap_; }

 private:
  std::uint64_t needed_;
  std::uint64_t cap_;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class MissingEntry : public Error {
 public:
  MissingEntry(const std::string& kind, std::size_t i, std::size_t j)
      : Error("missing " + kind + " entry (" + std::to_string(i) + ", " + std::to_string(j) + ")"),
        i_(i),
        j_(j) {}
  std::size_t i() const { return i_; }
  std::size_t j() const { return j_; }

 private:
  std::size_t i_;
  std::size_t j_;
};

// Outcome of an axiom check.  `code` names the first violated law and `where`
// holds the offending basis indices, so tests can pin diagnoses exactly.
struct Validation {
  enum class Code {
    ok,
    bad_shape,
    entry_out_of_range,
    non_associative,
    unit_axiom_violated,
    module_axiom_violated,
    unit_action_violated,
    compatibility_violated,
    not_idempotent,
    zero_idempotent,
    duplicate_idempotent,
    sum_not_unit,
    not_left_semicentral,
    not_in_corner,
  };

  Code code = Code::ok;
  std::array<std::size_t, 3> where{0, 0, 0};
  std::string message;

  bool passed() const { return code == Code::ok; }
  explicit operator bool() const { return passed(); }

  static Validation ok_result() { return Validation{}; }
  static Validation fail(Code c, std::array<std::size_t, 3> w, std::string msg) {
    Validation v;
    v.code = c;
    v.where = w;
    v.message = std::move(msg);
    return v;
  }
};

// Throws ValidationFailed if `v` records a violation.
inline void require(const Validation& v) {
  if (!v.passed()) throw ValidationFailed(v.message);
}

}  // namespace sliplab
