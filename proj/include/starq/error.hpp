#pragma once

#include <stdexcept>
#include <string>

namespace starq {

enum class ErrorCode {
  ParseError,
  LengthMismatch,
  NotMaximal,
  NotIntegral,
  StabilizerTooLarge,
  NotAnchor,
  NotTypeOne,
  IntegralTwist,
  NoArrow,
  NotDominant,
  WrongType,
  BadShape,
  WindowTooSmall,
  NotInModule,
};

const char* error_code_name(ErrorCode code);

class DomainError : public std::runtime_error {
 public:
  DomainError(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace starq
