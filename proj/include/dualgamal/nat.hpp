#ifndef DUALGAMAL_NAT_HPP_
#define DUALGAMAL_NAT_HPP_

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace dualgamal {

// Unsigned arbitrary-precision integer. Every scalar in the schemes (moduli,
// generators, exponents, ciphertext components) is a Nat. Callers keep values
// non-negative; the library never produces a negative Nat.
using Nat = mpz_class;

inline std::size_t bit_length(const Nat& x) {
  return x == 0 ? 0 : mpz_sizeinbase(x.get_mpz_t(), 2);
}

inline bool test_bit(const Nat& x, std::size_t i) {
  return mpz_tstbit(x.get_mpz_t(), i) != 0;
}

inline bool fits_u64(const Nat& x) {
  return x >= 0 && bit_length(x) <= 64;
}

std::uint64_t to_u64(const Nat& x);
Nat from_u64(std::uint64_t v);

// Lowercase hex, no prefix, no leading zeros ("0" for zero).
std::string to_hex(const Nat& x);
// Inverse of to_hex. Rejects empty strings, prefixes, uppercase digits and
// leading zeros with Errc::MalformedFile.
Nat from_hex(std::string_view s);

std::string to_decimal(const Nat& x);
// Accepts plain decimal or a 0x-prefixed hex literal. Throws InvalidParams.
Nat parse_nat(std::string_view s);

}  // namespace dualgamal

#endif  // DUALGAMAL_NAT_HPP_
