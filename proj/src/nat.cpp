#include "dualgamal/nat.hpp"

#include <algorithm>

#include "dualgamal/error.hpp"

namespace dualgamal {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::EvenModulus: return "EvenModulus";
    case Errc::WidthTooSmall: return "WidthTooSmall";
    case Errc::OperandOutOfRange: return "OperandOutOfRange";
    case Errc::NotInvertible: return "NotInvertible";
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::ResidueOutOfRange: return "ResidueOutOfRange";
    case Errc::NotFound: return "NotFound";
    case Errc::NotCoprime: return "NotCoprime";
    case Errc::InvalidParams: return "InvalidParams";
    case Errc::MessageOutOfRange: return "MessageOutOfRange";
    case Errc::CiphertextOutOfRange: return "CiphertextOutOfRange";
    case Errc::CiphertextMalformed: return "CiphertextMalformed";
    case Errc::DlogNotFound: return "DlogNotFound";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::VerificationMismatch: return "VerificationMismatch";
    case Errc::SchemeMismatch: return "SchemeMismatch";
    case Errc::MalformedFile: return "MalformedFile";
  }
  return "Unknown";
}

std::uint64_t to_u64(const Nat& x) {
  if (!fits_u64(x)) {
    throw Error(Errc::OperandOutOfRange, "value does not fit in 64 bits");
  }
  std::uint64_t v = 0;
  mpz_export(&v, nullptr, -1, sizeof(v), 0, 0, x.get_mpz_t());
  return v;
}

Nat from_u64(std::uint64_t v) {
  Nat x;
  mpz_import(x.get_mpz_t(), 1, -1, sizeof(v), 0, 0, &v);
  return x;
}

std::string to_hex(const Nat& x) { return x.get_str(16); }

Nat from_hex(std::string_view s) {
  const bool digits_ok =
      !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
        return (c >= '0' && c <= '9') || (c >= 'a' && c <= 'f');
      });
  if (!digits_ok || (s.size() > 1 && s.front() == '0')) {
    throw Error(Errc::MalformedFile,
                "expected minimal lowercase hex, got '" + std::string(s) + "'");
  }
  return Nat(std::string(s), 16);
}

std::string to_decimal(const Nat& x) { return x.get_str(10); }

Nat parse_nat(std::string_view s) {
  int base = 10;
  if (s.size() > 2 && s[0] == '0' && (s[1] == 'x' || s[1] == 'X')) {
    s.remove_prefix(2);
    base = 16;
  }
  const bool digits_ok =
      !s.empty() && std::all_of(s.begin(), s.end(), [base](char c) {
        if (c >= '0' && c <= '9') return true;
        return base == 16 && ((c >= 'a' && c <= 'f') || (c >= 'A' && c <= 'F'));
      });
  if (!digits_ok) {
    throw Error(Errc::InvalidParams, "not a non-negative integer: '" +
                                         std::string(s) + "'");
  }
  return Nat(std::string(s), base);
}

}  // namespace dualgamal
