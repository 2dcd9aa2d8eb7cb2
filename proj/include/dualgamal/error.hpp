#ifndef DUALGAMAL_ERROR_HPP_
#define DUALGAMAL_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace dualgamal {

enum class Errc {
  EvenModulus,
  WidthTooSmall,
  OperandOutOfRange,
  NotInvertible,
  LengthMismatch,
  ResidueOutOfRange,
  NotFound,
  NotCoprime,
  InvalidParams,
  MessageOutOfRange,
  CiphertextOutOfRange,
  CiphertextMalformed,
  DlogNotFound,
  DivisionByZero,
  VerificationMismatch,
  SchemeMismatch,
  MalformedFile,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace dualgamal

#endif  // DUALGAMAL_ERROR_HPP_
