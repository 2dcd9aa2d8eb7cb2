#ifndef DUALGAMAL_NUMBER_THEORY_HPP_
#define DUALGAMAL_NUMBER_THEORY_HPP_

#include <optional>
#include <vector>

#include "dualgamal/nat.hpp"

namespace dualgamal {

// Miller-Rabin with `rounds` bases drawn from a fixed-seed stream, so the
// verdict for a given n never changes between runs.
bool is_probable_prime(const Nat& n, unsigned rounds = 64);

// Distinct prime factors of n when trial division up to 2^20 leaves a cofactor
// that is 1 or prime; nullopt otherwise.
std::optional<std::vector<Nat>> small_factorization(const Nat& n);

// Order of g in (Z/nZ)* for prime n, when n - 1 factors (see above).
std::optional<Nat> multiplicative_order(const Nat& g, const Nat& n);

// Largest prime strictly below 2^bits, for bits >= 3.
Nat largest_prime_below_pow2(unsigned bits);

// Smallest primitive root of prime n; requires n - 1 to factor.
Nat smallest_generator(const Nat& n);

}  // namespace dualgamal

#endif  // DUALGAMAL_NUMBER_THEORY_HPP_
