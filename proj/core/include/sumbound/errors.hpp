#ifndef SUMBOUND_ERRORS_HPP
#define SUMBOUND_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sumbound {

enum class Errc {
  NotPrime,
  NotIrreducible,
  NotFiniteField,
  DivisionByZero,
  CtxMismatch,
  ZeroPolynomial,
  DegenerateFactor,
  EmptySet,
  HypothesisNotMet,
  GapHypothesisFails,
  CharTwo,
  SizeGuard,
  DegreeGuard,
  ZeroU,
  GuardFailed,
  ParseError,
  CoeffDomainError,
  DuplicateElement,
  NotVanishing,
  BudgetExceeded,
  OutOfRange,
};

const char* errc_name(Errc c) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

// Parse failures carry the byte offset of the offending token.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t offset)
      : Error(Errc::ParseError, message + " at offset " + std::to_string(offset)),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace sumbound

#endif
