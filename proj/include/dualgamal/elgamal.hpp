#ifndef DUALGAMAL_ELGAMAL_HPP_
#define DUALGAMAL_ELGAMAL_HPP_

#include "dualgamal/modmath.hpp"
#include "dualgamal/nat.hpp"
#include "dualgamal/random.hpp"
#include "dualgamal/scheduler.hpp"

namespace dualgamal {

// Deployment parameters: prime modulus n and generator g. `width` is the
// datapath width in bits; 0 selects max(8, bit_length(n)).
struct GroupParams {
  Nat n;
  Nat g;
  unsigned width = 0;
  // Also require g to generate all of (Z/nZ)* (needs n - 1 to factor).
  bool strict = false;
};

unsigned default_width(const Nat& n);

class ElGamalPublicKey {
 public:
  // Validates n prime (64-round Miller-Rabin), 1 < g < n and 1 <= h < n.
  // Throws InvalidParams.
  ElGamalPublicKey(Nat n, Nat g, Nat h, unsigned width = 0);

  const Nat& n() const { return n_; }
  const Nat& g() const { return g_; }
  const Nat& h() const { return h_; }
  const MontgomeryContext& context() const { return ctx_; }

  friend bool operator==(const ElGamalPublicKey& a, const ElGamalPublicKey& b) {
    return a.n_ == b.n_ && a.g_ == b.g_ && a.h_ == b.h_;
  }

 private:
  Nat n_;
  Nat g_;
  Nat h_;
  MontgomeryContext ctx_;
};

class ElGamalSecretKey {
 public:
  explicit ElGamalSecretKey(Nat k) : k_(std::move(k)) {}

  const Nat& k() const { return k_; }

  friend bool operator==(const ElGamalSecretKey&,
                         const ElGamalSecretKey&) = default;

 private:
  Nat k_;
};

struct Ciphertext {
  Nat c1;
  Nat c2;

  friend bool operator==(const Ciphertext&, const Ciphertext&) = default;
};

struct KeyPair {
  ElGamalPublicKey pub;
  ElGamalSecretKey sec;
};

// Draws k in [1, n - 2] and publishes h = g^k mod n.
KeyPair keygen(const GroupParams& params, RandomSource& rng,
               Scheduler& sched);
KeyPair keygen(const GroupParams& params, RandomSource& rng);

// (g^l, h^l * m) mod n with a fresh l per call. Requires 1 <= m < n; m = 0
// has no inverse and would absorb every product.
//
// A scripted source may hand back l = 0, which yields (1, m): valid
// arithmetic that exposes the message. SeededRandom never draws 0.
Ciphertext encrypt(const ElGamalPublicKey& pk, const Nat& m, RandomSource& rng,
                   Scheduler& sched);
Ciphertext encrypt(const ElGamalPublicKey& pk, const Nat& m, RandomSource& rng);

// C2 / C1^k mod n: one exponentiation, one division.
Nat decrypt(const ElGamalPublicKey& pk, const ElGamalSecretKey& sk,
            const Ciphertext& ct, Scheduler& sched);
Nat decrypt(const ElGamalPublicKey& pk, const ElGamalSecretKey& sk,
            const Ciphertext& ct);

// Component-wise product. Needs only public data; this is the operation the
// untrusted evaluator runs.
Ciphertext homomorphic_mul(const ElGamalPublicKey& pk, const Ciphertext& a,
                           const Ciphertext& b);

namespace detail {
// Ephemeral exponents must satisfy 0 <= e < n to fit the datapath width.
Nat draw_exponent(const ElGamalPublicKey& pk, RandomSource& rng);
void check_components(const ElGamalPublicKey& pk, const Ciphertext& ct);
}  // namespace detail

}  // namespace dualgamal

#endif  // DUALGAMAL_ELGAMAL_HPP_
