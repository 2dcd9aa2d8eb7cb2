#ifndef DUALGAMAL_MODMATH_HPP_
#define DUALGAMAL_MODMATH_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "dualgamal/cycle_ledger.hpp"
#include "dualgamal/nat.hpp"

namespace dualgamal {

// Precomputed constants for Montgomery arithmetic modulo an odd M with
// radix R = 2^width. Immutable after construction.
class MontgomeryContext {
 public:
  // Throws EvenModulus for even M, InvalidParams for M < 3 and
  // WidthTooSmall when 2^width <= M.
  MontgomeryContext(Nat modulus, unsigned width);

  const Nat& modulus() const { return modulus_; }
  unsigned width() const { return width_; }
  const Nat& r() const { return r_; }
  const Nat& r_inv() const { return r_inv_; }
  // R^2 mod M, the multiplier that moves a value into the Montgomery domain.
  const Nat& r2() const { return r2_; }
  // R mod M, the Montgomery image of 1.
  const Nat& one() const { return one_; }

  // Moduli below 2^64 run on a fixed-width fast path.
  bool native() const { return width_ <= 64; }
  std::uint64_t modulus_u64() const { return m64_; }

 private:
  Nat modulus_;
  unsigned width_;
  Nat r_;
  Nat r_inv_;
  Nat r2_;
  Nat one_;
  std::uint64_t m64_ = 0;
};

// Whether the two multiplications inside one exponentiation loop iteration
// run on separate multipliers (Concurrent) or share one (Serial).
enum class MulOverlap { Serial, Concurrent };

// X * Y * R^-1 mod M by the bit-serial add/shift algorithm. Requires X, Y < M
// (OperandOutOfRange otherwise). Charges OpKind::MontMul.
Nat mont_mul(const MontgomeryContext& ctx, const Nat& x, const Nat& y,
             CycleLedger* ledger = nullptr);

// x * R mod M and x * R^-1 mod M, each one Montgomery product.
Nat to_mont(const MontgomeryContext& ctx, const Nat& x,
            CycleLedger* ledger = nullptr);
Nat from_mont(const MontgomeryContext& ctx, const Nat& x_bar,
              CycleLedger* ledger = nullptr);

// a * b mod M for ordinary-domain operands, built from two Montgomery
// products. Charges OpKind::ModMul.
Nat mod_mul(const MontgomeryContext& ctx, const Nat& a, const Nat& b,
            CycleLedger* ledger = nullptr);

// base^exponent mod M, LSB-first, always exactly ctx.width() iterations.
// Requires base < M and exponent < 2^width. Charges OpKind::MontExp.
Nat mont_exp(const MontgomeryContext& ctx, const Nat& base,
             const Nat& exponent, MulOverlap overlap = MulOverlap::Concurrent,
             CycleLedger* ledger = nullptr);

// a * b^-1 mod M by plus-minus binary division. Throws NotInvertible when
// gcd(b, M) != 1 (including b = 0). Charges OpKind::ModDiv.
Nat mod_div(const MontgomeryContext& ctx, const Nat& a, const Nat& b,
            CycleLedger* ledger = nullptr);

// Pairwise-coprime moduli d_1..d_t with the inverse-CRT table
// (D/d_i, (D/d_i)^-1 mod d_i).
class CrtBasis {
 public:
  struct Partial {
    Nat cofactor;  // D / d_i
    Nat inverse;   // cofactor^-1 mod d_i
  };

  // Throws InvalidParams for an empty basis or a modulus below 2, NotCoprime
  // when two moduli share a factor.
  explicit CrtBasis(std::vector<Nat> moduli);

  const std::vector<Nat>& moduli() const { return moduli_; }
  const Nat& product() const { return product_; }
  const std::vector<Partial>& partials() const { return partials_; }
  std::size_t size() const { return moduli_.size(); }
  const Nat& max_modulus() const;

 private:
  std::vector<Nat> moduli_;
  Nat product_;
  std::vector<Partial> partials_;
};

// (m mod d_1, ..., m mod d_t).
std::vector<Nat> mod_reduce_vector(const Nat& m, const CrtBasis& basis);

// Sum of r_i * (D/d_i) * ((D/d_i)^-1 mod d_i), reduced mod D. Throws
// LengthMismatch or ResidueOutOfRange.
Nat crt_recombine(std::span<const Nat> residues, const CrtBasis& basis);

// Smallest e in [0, bound) with g^e = y (mod M), by linear scan with one
// Montgomery product per step. Throws NotFound. Charges OpKind::DlogScan.
std::uint64_t dlog_small(const MontgomeryContext& ctx, const Nat& g,
                         const Nat& y, std::uint64_t bound,
                         CycleLedger* ledger = nullptr);

}  // namespace dualgamal

#endif  // DUALGAMAL_MODMATH_HPP_
