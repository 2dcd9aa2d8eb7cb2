#include "dualgamal/random.hpp"

#include "dualgamal/error.hpp"

namespace dualgamal {

Nat SeededRandom::uniform(const Nat& lo, const Nat& hi) {
  if (hi < lo) {
    throw Error(Errc::InvalidParams, "empty sampling range");
  }
  const Nat span = hi - lo + 1;
  const std::size_t bits = bit_length(span - 1);
  if (bits == 0) return lo;
  const std::size_t words = (bits + 63) / 64;
  for (;;) {
    Nat candidate = 0;
    for (std::size_t i = 0; i < words; ++i) {
      candidate <<= 64;
      candidate += from_u64(engine_());
    }
    mpz_fdiv_r_2exp(candidate.get_mpz_t(), candidate.get_mpz_t(), bits);
    if (candidate < span) return lo + candidate;
  }
}

Nat ScriptedRandom::uniform(const Nat& /*lo*/, const Nat& /*hi*/) {
  if (values_.empty()) {
    throw Error(Errc::InvalidParams, "scripted random source exhausted");
  }
  Nat v = std::move(values_.front());
  values_.pop_front();
  return v;
}

}  // namespace dualgamal
