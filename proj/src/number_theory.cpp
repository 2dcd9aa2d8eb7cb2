#include "dualgamal/number_theory.hpp"

#include <random>

#include "dualgamal/error.hpp"
#include "dualgamal/random.hpp"

namespace dualgamal {

namespace {

constexpr std::uint64_t kWitnessSeed = 0x6a09e667f3bcc908ULL;
constexpr unsigned long kTrialLimit = 1UL << 20;

Nat powm(const Nat& b, const Nat& e, const Nat& m) {
  Nat r;
  mpz_powm(r.get_mpz_t(), b.get_mpz_t(), e.get_mpz_t(), m.get_mpz_t());
  return r;
}

}  // namespace

bool is_probable_prime(const Nat& n, unsigned rounds) {
  if (n < 2) return false;
  for (unsigned long p : {2UL, 3UL, 5UL, 7UL, 11UL, 13UL, 17UL, 19UL, 23UL}) {
    if (n == p) return true;
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
  }
  Nat d = n - 1;
  unsigned s = 0;
  while (mpz_even_p(d.get_mpz_t())) {
    mpz_tdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), 1);
    ++s;
  }
  SeededRandom witnesses(kWitnessSeed);
  const Nat n_minus_1 = n - 1;
  for (unsigned round = 0; round < rounds; ++round) {
    Nat x = powm(witnesses.uniform(2, n - 2), d, n);
    if (x == 1 || x == n_minus_1) continue;
    bool composite = true;
    for (unsigned i = 1; i < s; ++i) {
      x = (x * x) % n;
      if (x == n_minus_1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::optional<std::vector<Nat>> small_factorization(const Nat& n) {
  std::vector<Nat> factors;
  Nat rest = n;
  for (unsigned long p = 2; p < kTrialLimit && rest > 1; p += (p == 2 ? 1 : 2)) {
    if (Nat(p) * p > rest) break;
    if (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      factors.emplace_back(p);
      while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) rest /= p;
    }
  }
  if (rest > 1) {
    if (!is_probable_prime(rest)) return std::nullopt;
    factors.push_back(rest);
  }
  return factors;
}

std::optional<Nat> multiplicative_order(const Nat& g, const Nat& n) {
  auto factors = small_factorization(n - 1);
  if (!factors) return std::nullopt;
  Nat order = n - 1;
  for (const Nat& p : *factors) {
    while (mpz_divisible_p(order.get_mpz_t(), p.get_mpz_t()) &&
           powm(g, order / p, n) == 1) {
      order /= p;
    }
  }
  return order;
}

Nat largest_prime_below_pow2(unsigned bits) {
  if (bits < 3) {
    throw Error(Errc::InvalidParams, "need at least 3 bits");
  }
  Nat candidate;
  mpz_ui_pow_ui(candidate.get_mpz_t(), 2, bits);
  candidate -= 1;
  while (!is_probable_prime(candidate)) candidate -= 2;
  return candidate;
}

Nat smallest_generator(const Nat& n) {
  for (Nat g = 2; g < n; ++g) {
    auto order = multiplicative_order(g, n);
    if (!order) {
      throw Error(Errc::InvalidParams, "cannot factor n - 1");
    }
    if (*order == n - 1) return g;
  }
  throw Error(Errc::InvalidParams, "no generator found");
}

}  // namespace dualgamal
