#include "dualgamal/elgamal.hpp"

#include <algorithm>
#include <string>

#include "dualgamal/error.hpp"
#include "dualgamal/number_theory.hpp"

namespace dualgamal {

namespace {

const Nat& validate_group(const Nat& n, const Nat& g) {
  if (!is_probable_prime(n)) {
    throw Error(Errc::InvalidParams, "n = " + to_decimal(n) + " is not prime");
  }
  if (n < 5) {
    throw Error(Errc::InvalidParams, "n must be at least 5");
  }
  if (g <= 1 || g >= n) {
    throw Error(Errc::InvalidParams, "g must satisfy 1 < g < n");
  }
  return n;
}

}  // namespace

unsigned default_width(const Nat& n) {
  return static_cast<unsigned>(std::max<std::size_t>(8, bit_length(n)));
}

ElGamalPublicKey::ElGamalPublicKey(Nat n, Nat g, Nat h, unsigned width)
    : n_(std::move(n)),
      g_(std::move(g)),
      h_(std::move(h)),
      ctx_(validate_group(n_, g_), width == 0 ? default_width(n_) : width) {
  if (h_ < 1 || h_ >= n_) {
    throw Error(Errc::InvalidParams, "h must satisfy 1 <= h < n");
  }
}

namespace detail {

Nat draw_exponent(const ElGamalPublicKey& pk, RandomSource& rng) {
  Nat e = rng.uniform(1, pk.n() - 2);
  if (e < 0 || e >= pk.n()) {
    throw Error(Errc::InvalidParams,
                "random exponent " + to_decimal(e) + " outside [0, n)");
  }
  return e;
}

void check_components(const ElGamalPublicKey& pk, const Ciphertext& ct) {
  if (ct.c1 < 0 || ct.c1 >= pk.n() || ct.c2 < 0 || ct.c2 >= pk.n()) {
    throw Error(Errc::CiphertextOutOfRange,
                "ciphertext components must be below n");
  }
}

}  // namespace detail

KeyPair keygen(const GroupParams& params, RandomSource& rng,
               Scheduler& sched) {
  validate_group(params.n, params.g);
  if (params.strict) {
    auto order = multiplicative_order(params.g, params.n);
    if (!order || *order != params.n - 1) {
      throw Error(Errc::InvalidParams,
                  "g = " + to_decimal(params.g) + " does not generate Z_n*");
    }
  }
  const unsigned width = params.width == 0 ? default_width(params.n)
                                           : params.width;
  MontgomeryContext ctx(params.n, width);
  Nat k = rng.uniform(1, params.n - 2);
  if (k < 1 || k >= params.n - 1) {
    throw Error(Errc::InvalidParams, "secret exponent outside [1, n - 2]");
  }
  Nat h = sched.exp(ctx, params.g, k);
  return KeyPair{ElGamalPublicKey(params.n, params.g, std::move(h), width),
                 ElGamalSecretKey(std::move(k))};
}

KeyPair keygen(const GroupParams& params, RandomSource& rng) {
  Scheduler sched;
  return keygen(params, rng, sched);
}

Ciphertext encrypt(const ElGamalPublicKey& pk, const Nat& m, RandomSource& rng,
                   Scheduler& sched) {
  if (m < 1 || m >= pk.n()) {
    throw Error(Errc::MessageOutOfRange,
                "message must satisfy 1 <= m < n = " + to_decimal(pk.n()));
  }
  const Nat l = detail::draw_exponent(pk, rng);
  auto [c1, mask] = sched.exp_pair(pk.context(), pk.g(), l, pk.h(), l);
  return Ciphertext{std::move(c1), sched.mul(pk.context(), mask, m)};
}

Ciphertext encrypt(const ElGamalPublicKey& pk, const Nat& m,
                   RandomSource& rng) {
  Scheduler sched;
  return encrypt(pk, m, rng, sched);
}

Nat decrypt(const ElGamalPublicKey& pk, const ElGamalSecretKey& sk,
            const Ciphertext& ct, Scheduler& sched) {
  detail::check_components(pk, ct);
  const Nat shared = sched.decrypt_exp(pk.context(), ct.c1, sk.k());
  return sched.div(pk.context(), ct.c2, shared);
}

Nat decrypt(const ElGamalPublicKey& pk, const ElGamalSecretKey& sk,
            const Ciphertext& ct) {
  Scheduler sched;
  return decrypt(pk, sk, ct, sched);
}

Ciphertext homomorphic_mul(const ElGamalPublicKey& pk, const Ciphertext& a,
                           const Ciphertext& b) {
  detail::check_components(pk, a);
  detail::check_components(pk, b);
  return Ciphertext{mod_mul(pk.context(), a.c1, b.c1),
                    mod_mul(pk.context(), a.c2, b.c2)};
}

}  // namespace dualgamal
