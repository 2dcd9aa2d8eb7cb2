#ifndef DUALGAMAL_CEG_HPP_
#define DUALGAMAL_CEG_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "dualgamal/elgamal.hpp"
#include "dualgamal/modmath.hpp"

namespace dualgamal {

// CRT-based ElGamal: messages live in the exponent, split across a coprime
// basis so each residue's discrete log is a short scan.

struct CegParams {
  GroupParams group;
  std::vector<Nat> moduli;
};

class CegPublicKey {
 public:
  // Throws InvalidParams when the plaintext space D reaches ord(g). The order
  // is computed when n - 1 factors; otherwise the check is skipped and decode
  // depth is bounded by n - 1 instead.
  CegPublicKey(ElGamalPublicKey base, CrtBasis basis);

  const ElGamalPublicKey& base() const { return base_; }
  const CrtBasis& basis() const { return basis_; }
  // Plaintext space is [0, D).
  const Nat& plaintext_bound() const { return basis_.product(); }
  // Known or assumed (n - 1) order of g.
  const Nat& group_order() const { return order_; }

  friend bool operator==(const CegPublicKey& a, const CegPublicKey& b) {
    return a.base_ == b.base_ && a.basis_.moduli() == b.basis_.moduli();
  }

 private:
  ElGamalPublicKey base_;
  CrtBasis basis_;
  Nat order_;
};

struct CegCiphertext {
  std::vector<Ciphertext> pairs;
  // Homomorphic additions folded into this ciphertext. Residue i carries an
  // exponent of at most (add_count + 1) * (d_i - 1).
  std::uint64_t add_count = 0;

  friend bool operator==(const CegCiphertext&, const CegCiphertext&) = default;
};

struct CegKeyPair {
  CegPublicKey pub;
  ElGamalSecretKey sec;
};

// Throws NotCoprime, InvalidParams.
CegKeyPair ceg_keygen(const CegParams& params, RandomSource& rng,
                      Scheduler& sched);
CegKeyPair ceg_keygen(const CegParams& params, RandomSource& rng);

// Requires 0 <= m < D. Draws an independent l_i for every pair.
CegCiphertext ceg_encrypt(const CegPublicKey& pk, const Nat& m,
                          RandomSource& rng, Scheduler& sched);
CegCiphertext ceg_encrypt(const CegPublicKey& pk, const Nat& m,
                          RandomSource& rng);

// Per pair: v_i = C2_i / C1_i^k, e_i = log_g v_i scanned below
// (add_count + 1)(d_i - 1) + 1, r_i = e_i mod d_i; then inverse CRT.
// Throws DlogNotFound when a residue is out of bounds or the declared depth
// could alias modulo ord(g); CiphertextMalformed on a pair-count mismatch.
Nat ceg_decrypt(const CegPublicKey& pk, const ElGamalSecretKey& sk,
                const CegCiphertext& ct, Scheduler& sched);
Nat ceg_decrypt(const CegPublicKey& pk, const ElGamalSecretKey& sk,
                const CegCiphertext& ct);

// Pair-wise product; needs only public data.
CegCiphertext homomorphic_add(const CegPublicKey& pk, const CegCiphertext& a,
                              const CegCiphertext& b);

// Exclusive scan bound for residue i at the given addition depth.
Nat dlog_bound(const Nat& modulus, std::uint64_t add_count);

}  // namespace dualgamal

#endif  // DUALGAMAL_CEG_HPP_
