#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace primtower {

enum class ErrorCode {
  kArithmetic,        // division by zero, inexact division
  kInvalidArgument,   // precondition violated by the caller
  kResourceLimit,     // configured size cap exceeded
  kNonPrimitive,      // tower level whose derivative is a derivative
  kDuplicateName,
  kUnknownSymbol,
  kSyntax,
  kNotRemainder,
  kNotInAuxiliary,
  kNonSimple,
  kNonConstantResidue,
  kInvalidTower,
  kIo,
};

std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

class NonPrimitiveError : public Error {
 public:
  NonPrimitiveError(int level, const std::string& what)
      : Error(ErrorCode::kNonPrimitive, what), level_(level) {}
  int level() const { return level_; }

 private:
  int level_;
};

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, const std::string& what)
      : Error(ErrorCode::kSyntax, what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace primtower
