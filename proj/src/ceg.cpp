#include "dualgamal/ceg.hpp"

#include <string>

#include "dualgamal/error.hpp"
#include "dualgamal/number_theory.hpp"

namespace dualgamal {

namespace {

void check_shape(const CegPublicKey& pk, const CegCiphertext& ct) {
  if (ct.pairs.size() != pk.basis().size()) {
    throw Error(Errc::CiphertextMalformed,
                "expected " + std::to_string(pk.basis().size()) +
                    " pairs, got " + std::to_string(ct.pairs.size()));
  }
  for (const Ciphertext& pair : ct.pairs) {
    detail::check_components(pk.base(), pair);
  }
}

}  // namespace

Nat dlog_bound(const Nat& modulus, std::uint64_t add_count) {
  return (from_u64(add_count) + 1) * (modulus - 1) + 1;
}

CegPublicKey::CegPublicKey(ElGamalPublicKey base, CrtBasis basis)
    : base_(std::move(base)), basis_(std::move(basis)) {
  auto order = multiplicative_order(base_.g(), base_.n());
  order_ = order ? *order : base_.n() - 1;
  if (basis_.product() >= order_) {
    throw Error(Errc::InvalidParams,
                "plaintext space D = " + to_decimal(basis_.product()) +
                    " must be below ord(g) = " + to_decimal(order_));
  }
}

CegKeyPair ceg_keygen(const CegParams& params, RandomSource& rng,
                      Scheduler& sched) {
  CrtBasis basis(params.moduli);
  KeyPair keys = keygen(params.group, rng, sched);
  return CegKeyPair{CegPublicKey(std::move(keys.pub), std::move(basis)),
                    std::move(keys.sec)};
}

CegKeyPair ceg_keygen(const CegParams& params, RandomSource& rng) {
  Scheduler sched;
  return ceg_keygen(params, rng, sched);
}

CegCiphertext ceg_encrypt(const CegPublicKey& pk, const Nat& m,
                          RandomSource& rng, Scheduler& sched) {
  if (m < 0 || m >= pk.plaintext_bound()) {
    throw Error(Errc::MessageOutOfRange,
                "message must satisfy 0 <= m < D = " +
                    to_decimal(pk.plaintext_bound()));
  }
  const ElGamalPublicKey& base = pk.base();
  const MontgomeryContext& ctx = base.context();
  const std::vector<Nat> residues = sched.reduce(ctx, m, pk.basis());

  CegCiphertext out;
  out.pairs.reserve(residues.size());
  for (const Nat& residue : residues) {
    const Nat l = detail::draw_exponent(base, rng);
    auto [c1, mask] = sched.exp_pair(ctx, base.g(), l, base.h(), l);
    const Nat encoded = sched.exp(ctx, base.g(), residue);
    out.pairs.push_back(Ciphertext{std::move(c1), sched.mul(ctx, mask, encoded)});
  }
  return out;
}

CegCiphertext ceg_encrypt(const CegPublicKey& pk, const Nat& m,
                          RandomSource& rng) {
  Scheduler sched;
  return ceg_encrypt(pk, m, rng, sched);
}

Nat ceg_decrypt(const CegPublicKey& pk, const ElGamalSecretKey& sk,
                const CegCiphertext& ct, Scheduler& sched) {
  check_shape(pk, ct);
  const ElGamalPublicKey& base = pk.base();
  const MontgomeryContext& ctx = base.context();

  std::vector<Nat> residues;
  residues.reserve(ct.pairs.size());
  for (std::size_t i = 0; i < ct.pairs.size(); ++i) {
    const Nat& d = pk.basis().moduli()[i];
    const Nat bound = dlog_bound(d, ct.add_count);
    if (bound > pk.group_order()) {
      throw Error(Errc::DlogNotFound,
                  "addition depth " + std::to_string(ct.add_count) +
                      " exceeds the unique-decoding range of ord(g) = " +
                      to_decimal(pk.group_order()));
    }
    const Nat shared = sched.decrypt_exp(ctx, ct.pairs[i].c1, sk.k());
    const Nat encoded = sched.div(ctx, ct.pairs[i].c2, shared);
    std::uint64_t exponent = 0;
    try {
      exponent = sched.dlog(ctx, base.g(), encoded, to_u64(bound));
    } catch (const Error& e) {
      if (e.code() != Errc::NotFound) throw;
      throw Error(Errc::DlogNotFound,
                  "residue " + std::to_string(i) +
                      " has no exponent below " + to_decimal(bound));
    }
    residues.push_back(from_u64(exponent) % d);
  }
  return sched.recombine(ctx, residues, pk.basis());
}

Nat ceg_decrypt(const CegPublicKey& pk, const ElGamalSecretKey& sk,
                const CegCiphertext& ct) {
  Scheduler sched;
  return ceg_decrypt(pk, sk, ct, sched);
}

CegCiphertext homomorphic_add(const CegPublicKey& pk, const CegCiphertext& a,
                              const CegCiphertext& b) {
  check_shape(pk, a);
  check_shape(pk, b);
  CegCiphertext out;
  out.pairs.reserve(a.pairs.size());
  for (std::size_t i = 0; i < a.pairs.size(); ++i) {
    out.pairs.push_back(homomorphic_mul(pk.base(), a.pairs[i], b.pairs[i]));
  }
  out.add_count = a.add_count + b.add_count + 1;
  return out;
}

}  // namespace dualgamal
