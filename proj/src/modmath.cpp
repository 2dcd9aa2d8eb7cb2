#include "dualgamal/modmath.hpp"

#include <cstdlib>
#include <string>
#include <utility>

#include "dualgamal/error.hpp"

namespace dualgamal {

namespace {

using u128 = unsigned __int128;
using i128 = __int128;

void require_below(const MontgomeryContext& ctx, const Nat& x,
                   const char* what) {
  if (x < 0 || x >= ctx.modulus()) {
    throw Error(Errc::OperandOutOfRange,
                std::string(what) + " must be below the modulus " +
                    to_decimal(ctx.modulus()));
  }
}

// Radix-2 Montgomery product. The accumulator stays below 2M, so a single
// conditional subtraction finishes it.
std::uint64_t product_u64(std::uint64_t x, std::uint64_t y, std::uint64_t m,
                          unsigned width) {
  u128 p = 0;
  for (unsigned i = 0; i < width; ++i) {
    if ((x >> i) & 1U) p += y;
    if (p & 1U) p += m;
    p >>= 1;
  }
  if (p >= m) p -= m;
  return static_cast<std::uint64_t>(p);
}

Nat product_big(const Nat& x, const Nat& y, const Nat& m, unsigned width) {
  Nat p = 0;
  for (unsigned i = 0; i < width; ++i) {
    if (test_bit(x, i)) p += y;
    if (mpz_odd_p(p.get_mpz_t())) p += m;
    mpz_tdiv_q_2exp(p.get_mpz_t(), p.get_mpz_t(), 1);
  }
  if (p >= m) p -= m;
  return p;
}

Nat product(const MontgomeryContext& ctx, const Nat& x, const Nat& y) {
  if (ctx.native()) {
    return from_u64(product_u64(to_u64(x), to_u64(y), ctx.modulus_u64(),
                                ctx.width()));
  }
  return product_big(x, y, ctx.modulus(), ctx.width());
}

Nat exp_native(const MontgomeryContext& ctx, const Nat& base,
               const Nat& exponent) {
  const std::uint64_t m = ctx.modulus_u64();
  const unsigned w = ctx.width();
  const std::uint64_t e = to_u64(exponent);
  std::uint64_t square = product_u64(to_u64(base), to_u64(ctx.r2()), m, w);
  std::uint64_t acc = to_u64(ctx.one());
  for (unsigned i = 0; i < w; ++i) {
    // In hardware both products of an iteration may run concurrently; the
    // accumulate reads the square from before this iteration's squaring.
    if ((e >> i) & 1U) acc = product_u64(acc, square, m, w);
    square = product_u64(square, square, m, w);
  }
  return from_u64(product_u64(acc, 1, m, w));
}

Nat exp_big(const MontgomeryContext& ctx, const Nat& base,
            const Nat& exponent) {
  const Nat& m = ctx.modulus();
  const unsigned w = ctx.width();
  Nat square = product_big(base, ctx.r2(), m, w);
  Nat acc = ctx.one();
  for (unsigned i = 0; i < w; ++i) {
    if (test_bit(exponent, i)) acc = product_big(acc, square, m, w);
    square = product_big(square, square, m, w);
  }
  return product_big(acc, 1, m, w);
}

// Plus-minus division on signed magnitudes. Invariants (mod M):
//   u * b == a * x   and   v * b == a * y
// x, y start at (b, M) and are always odd at the +/- step, so exactly one of
// x + y and x - y is divisible by four.
std::uint64_t divide_native(std::uint64_t a, std::uint64_t b,
                            std::uint64_t m) {
  auto half = [m](std::uint64_t u) -> std::uint64_t {
    return (u & 1U) ? static_cast<std::uint64_t>((u128{u} + m) >> 1) : u >> 1;
  };
  auto add = [m](std::uint64_t u, std::uint64_t v) -> std::uint64_t {
    return static_cast<std::uint64_t>((u128{u} + v) % m);
  };
  auto sub = [m](std::uint64_t u, std::uint64_t v) -> std::uint64_t {
    return u >= v ? u - v : static_cast<std::uint64_t>(u128{u} + m - v);
  };
  auto magnitude = [](i128 z) { return z < 0 ? -z : z; };

  i128 x = b;
  i128 y = m;
  std::uint64_t u = a;
  std::uint64_t v = 0;
  while (x != 0) {
    while ((x & 1) == 0) {
      x /= 2;
      u = half(u);
    }
    if (magnitude(x) < magnitude(y)) {
      std::swap(x, y);
      std::swap(u, v);
    }
    if (((x + y) & 3) == 0) {
      x += y;
      u = add(u, v);
    } else {
      x -= y;
      u = sub(u, v);
    }
  }
  if (y == 1) return v;
  if (y == -1) return v == 0 ? 0 : m - v;
  throw Error(Errc::NotInvertible, "divisor shares a factor with the modulus");
}

Nat divide_big(const Nat& a, const Nat& b, const Nat& m) {
  auto half = [&m](Nat& u) {
    if (mpz_odd_p(u.get_mpz_t())) u += m;
    mpz_tdiv_q_2exp(u.get_mpz_t(), u.get_mpz_t(), 1);
  };
  Nat x = b;
  Nat y = m;
  Nat u = a;
  Nat v = 0;
  while (x != 0) {
    while (mpz_even_p(x.get_mpz_t())) {
      mpz_tdiv_q_2exp(x.get_mpz_t(), x.get_mpz_t(), 1);
      half(u);
    }
    if (mpz_cmpabs(x.get_mpz_t(), y.get_mpz_t()) < 0) {
      std::swap(x, y);
      std::swap(u, v);
    }
    Nat sum = x + y;
    if (mpz_fdiv_ui(sum.get_mpz_t(), 4) == 0) {
      x = std::move(sum);
      u += v;
      if (u >= m) u -= m;
    } else {
      x -= y;
      u -= v;
      if (u < 0) u += m;
    }
  }
  if (y == 1) return v;
  if (y == -1) return v == 0 ? Nat(0) : Nat(m - v);
  throw Error(Errc::NotInvertible, "divisor shares a factor with the modulus");
}

}  // namespace

MontgomeryContext::MontgomeryContext(Nat modulus, unsigned width)
    : modulus_(std::move(modulus)), width_(width) {
  if (modulus_ < 3) {
    throw Error(Errc::InvalidParams, "modulus must be at least 3");
  }
  if (mpz_even_p(modulus_.get_mpz_t())) {
    throw Error(Errc::EvenModulus,
                "Montgomery modulus must be odd, got " + to_decimal(modulus_));
  }
  if (width_ == 0 || bit_length(modulus_) > width_) {
    throw Error(Errc::WidthTooSmall,
                "2^" + std::to_string(width_) + " does not exceed the modulus");
  }
  mpz_ui_pow_ui(r_.get_mpz_t(), 2, width_);
  one_ = r_ % modulus_;
  mpz_invert(r_inv_.get_mpz_t(), r_.get_mpz_t(), modulus_.get_mpz_t());
  r2_ = (one_ * one_) % modulus_;
  if (native()) m64_ = to_u64(modulus_);
}

Nat mont_mul(const MontgomeryContext& ctx, const Nat& x, const Nat& y,
             CycleLedger* ledger) {
  require_below(ctx, x, "X");
  require_below(ctx, y, "Y");
  if (ledger) ledger->charge(OpKind::MontMul, cost::mont_mul(ctx.width()));
  return product(ctx, x, y);
}

Nat to_mont(const MontgomeryContext& ctx, const Nat& x, CycleLedger* ledger) {
  return mont_mul(ctx, x, ctx.r2(), ledger);
}

Nat from_mont(const MontgomeryContext& ctx, const Nat& x_bar,
              CycleLedger* ledger) {
  return mont_mul(ctx, x_bar, 1, ledger);
}

Nat mod_mul(const MontgomeryContext& ctx, const Nat& a, const Nat& b,
            CycleLedger* ledger) {
  require_below(ctx, a, "multiplicand");
  require_below(ctx, b, "multiplier");
  if (ledger) ledger->charge(OpKind::ModMul, cost::mod_mul(ctx.width()));
  // (a b R^-1) R^2 R^-1 = a b.
  return product(ctx, product(ctx, a, b), ctx.r2());
}

Nat mont_exp(const MontgomeryContext& ctx, const Nat& base,
             const Nat& exponent, MulOverlap overlap, CycleLedger* ledger) {
  require_below(ctx, base, "base");
  if (exponent < 0 || bit_length(exponent) > ctx.width()) {
    throw Error(Errc::OperandOutOfRange,
                "exponent wider than " + std::to_string(ctx.width()) + " bits");
  }
  if (ledger) {
    ledger->charge(OpKind::MontExp,
                   cost::mont_exp(ctx.width(),
                                  overlap == MulOverlap::Concurrent));
  }
  return ctx.native() ? exp_native(ctx, base, exponent)
                      : exp_big(ctx, base, exponent);
}

Nat mod_div(const MontgomeryContext& ctx, const Nat& a, const Nat& b,
            CycleLedger* ledger) {
  require_below(ctx, a, "dividend");
  require_below(ctx, b, "divisor");
  if (ledger) ledger->charge(OpKind::ModDiv, cost::mod_div(ctx.width()));
  // The signed fast path needs headroom for x + y.
  if (ctx.width() <= 64) {
    return from_u64(divide_native(to_u64(a), to_u64(b), ctx.modulus_u64()));
  }
  return divide_big(a, b, ctx.modulus());
}

CrtBasis::CrtBasis(std::vector<Nat> moduli) : moduli_(std::move(moduli)) {
  if (moduli_.empty()) {
    throw Error(Errc::InvalidParams, "CRT basis needs at least one modulus");
  }
  for (const Nat& d : moduli_) {
    if (d < 2) {
      throw Error(Errc::InvalidParams, "CRT moduli must be at least 2");
    }
  }
  for (std::size_t i = 0; i < moduli_.size(); ++i) {
    for (std::size_t j = i + 1; j < moduli_.size(); ++j) {
      Nat g;
      mpz_gcd(g.get_mpz_t(), moduli_[i].get_mpz_t(), moduli_[j].get_mpz_t());
      if (g != 1) {
        throw Error(Errc::NotCoprime, "gcd(" + to_decimal(moduli_[i]) + ", " +
                                          to_decimal(moduli_[j]) +
                                          ") = " + to_decimal(g));
      }
    }
  }
  product_ = 1;
  for (const Nat& d : moduli_) product_ *= d;
  partials_.reserve(moduli_.size());
  for (const Nat& d : moduli_) {
    Partial p;
    p.cofactor = product_ / d;
    Nat reduced = p.cofactor % d;
    mpz_invert(p.inverse.get_mpz_t(), reduced.get_mpz_t(), d.get_mpz_t());
    partials_.push_back(std::move(p));
  }
}

const Nat& CrtBasis::max_modulus() const {
  const Nat* best = &moduli_.front();
  for (const Nat& d : moduli_) {
    if (d > *best) best = &d;
  }
  return *best;
}

std::vector<Nat> mod_reduce_vector(const Nat& m, const CrtBasis& basis) {
  std::vector<Nat> residues;
  residues.reserve(basis.size());
  for (const Nat& d : basis.moduli()) residues.push_back(m % d);
  return residues;
}

Nat crt_recombine(std::span<const Nat> residues, const CrtBasis& basis) {
  if (residues.size() != basis.size()) {
    throw Error(Errc::LengthMismatch,
                "expected " + std::to_string(basis.size()) + " residues, got " +
                    std::to_string(residues.size()));
  }
  Nat sum = 0;
  for (std::size_t i = 0; i < residues.size(); ++i) {
    const Nat& d = basis.moduli()[i];
    if (residues[i] < 0 || residues[i] >= d) {
      throw Error(Errc::ResidueOutOfRange,
                  "residue " + to_decimal(residues[i]) + " not below " +
                      to_decimal(d));
    }
    const auto& p = basis.partials()[i];
    sum += residues[i] * p.cofactor * p.inverse;
  }
  return sum % basis.product();
}

std::uint64_t dlog_small(const MontgomeryContext& ctx, const Nat& g,
                         const Nat& y, std::uint64_t bound,
                         CycleLedger* ledger) {
  require_below(ctx, g, "g");
  require_below(ctx, y, "y");
  if (bound == 0) {
    throw Error(Errc::InvalidParams, "dlog bound must be at least 1");
  }
  const Nat target = product(ctx, y, ctx.r2());
  const Nat step = product(ctx, g, ctx.r2());
  Nat power = ctx.one();
  for (std::uint64_t e = 0; e < bound; ++e) {
    if (power == target) {
      if (ledger) ledger->charge(OpKind::DlogScan, cost::dlog_scan(ctx.width(), e));
      return e;
    }
    power = product(ctx, power, step);
  }
  if (ledger) ledger->charge(OpKind::DlogScan, cost::dlog_scan(ctx.width(), bound));
  throw Error(Errc::NotFound, to_decimal(y) + " is not a power of " +
                                  to_decimal(g) + " below exponent " +
                                  std::to_string(bound));
}

}  // namespace dualgamal
