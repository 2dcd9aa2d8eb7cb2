#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "dualgamal/error.hpp"
#include "dualgamal/modmath.hpp"
#include "oracle.hpp"

namespace {

using dualgamal::CrtBasis;
using dualgamal::CycleLedger;
using dualgamal::Errc;
using dualgamal::Error;
using dualgamal::MontgomeryContext;
using dualgamal::MulOverlap;
using dualgamal::Nat;
using dualgamal::OpKind;

template <typename F>
Errc error_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no dualgamal::Error thrown";
  return Errc::InvalidParams;
}

Nat random_below(std::mt19937_64& rng, const Nat& bound) {
  Nat v = 0;
  const std::size_t words = dualgamal::bit_length(bound) / 64 + 2;
  for (std::size_t i = 0; i < words; ++i) {
    v <<= 64;
    v += dualgamal::from_u64(rng());
  }
  return v % bound;
}

TEST(MontgomeryContext, SmallExample) {
  MontgomeryContext ctx(13, 4);
  EXPECT_EQ(ctx.r(), 16);
  EXPECT_EQ(ctx.r_inv(), 9);  // 16 * 9 = 144 = 11 * 13 + 1
  EXPECT_EQ(ctx.r2(), 9);     // 256 mod 13
  EXPECT_EQ(ctx.one(), 3);
  EXPECT_TRUE(ctx.native());
}

TEST(MontgomeryContext, RejectsBadParameters) {
  EXPECT_EQ(error_of([] { MontgomeryContext(14, 8); }), Errc::EvenModulus);
  EXPECT_EQ(error_of([] { MontgomeryContext(13, 3); }), Errc::WidthTooSmall);
  EXPECT_EQ(error_of([] { MontgomeryContext(257, 8); }), Errc::WidthTooSmall);
  EXPECT_EQ(error_of([] { MontgomeryContext(1, 4); }), Errc::InvalidParams);
  EXPECT_NO_THROW(MontgomeryContext(255, 8));
}

TEST(MontMul, Example) {
  MontgomeryContext ctx(13, 4);
  EXPECT_EQ(dualgamal::mont_mul(ctx, 7, 11), 4);
  EXPECT_EQ(dualgamal::to_mont(ctx, 7), 8);
  EXPECT_EQ(dualgamal::from_mont(ctx, 8), 7);
}

TEST(MontMul, ExhaustiveSmallModuli) {
  for (unsigned m = 3; m <= 257; m += 2) {
    for (unsigned width : {dualgamal::bit_length(Nat(m)), std::size_t{12}}) {
      MontgomeryContext ctx(m, static_cast<unsigned>(width));
      for (unsigned x = 0; x < m; ++x) {
        for (unsigned y = 0; y < m; ++y) {
          ASSERT_EQ(dualgamal::mont_mul(ctx, x, y),
                    oracle::mont_mul(x, y, m, ctx.width()))
              << "m=" << m << " w=" << width << " x=" << x << " y=" << y;
        }
      }
    }
  }
}

TEST(MontMul, RejectsUnreducedOperands) {
  MontgomeryContext ctx(13, 4);
  EXPECT_EQ(error_of([&] { dualgamal::mont_mul(ctx, 13, 1); }),
            Errc::OperandOutOfRange);
  EXPECT_EQ(error_of([&] { dualgamal::mont_mul(ctx, 1, 14); }),
            Errc::OperandOutOfRange);
}

TEST(MontMul, DomainRoundTrip) {
  for (unsigned m : {13u, 23u, 251u, 65521u}) {
    MontgomeryContext ctx(m, 17);
    for (unsigned x = 0; x < std::min(m, 2000u); ++x) {
      ASSERT_EQ(dualgamal::from_mont(ctx, dualgamal::to_mont(ctx, x)), x);
    }
  }
}

TEST(ModMul, ExhaustiveSmall) {
  for (unsigned m : {13u, 23u, 251u}) {
    MontgomeryContext ctx(m, 8);
    for (unsigned a = 0; a < m; ++a) {
      for (unsigned b = 0; b < m; ++b) {
        ASSERT_EQ(dualgamal::mod_mul(ctx, a, b), (a * b) % m);
      }
    }
  }
}

TEST(MontExp, ExhaustiveSmall) {
  for (unsigned m : {13u, 23u, 251u}) {
    MontgomeryContext ctx(m, 8);
    for (unsigned b = 0; b < m; ++b) {
      for (unsigned e = 0; e < 256; ++e) {
        const Nat want = oracle::pow_mod(b, e, m);
        ASSERT_EQ(dualgamal::mont_exp(ctx, b, e), want)
            << m << " " << b << "^" << e;
        ASSERT_EQ(dualgamal::mont_exp(ctx, b, e, MulOverlap::Serial), want);
      }
    }
  }
}

TEST(MontExp, ZeroExponentAndZeroBase) {
  MontgomeryContext ctx(23, 5);
  EXPECT_EQ(dualgamal::mont_exp(ctx, 0, 0), 1);
  EXPECT_EQ(dualgamal::mont_exp(ctx, 0, 5), 0);
  EXPECT_EQ(dualgamal::mont_exp(ctx, 5, 0), 1);
}

TEST(MontExp, RejectsWideExponent) {
  MontgomeryContext ctx(23, 5);
  EXPECT_NO_THROW(dualgamal::mont_exp(ctx, 5, 31));
  EXPECT_EQ(error_of([&] { dualgamal::mont_exp(ctx, 5, 32); }),
            Errc::OperandOutOfRange);
  EXPECT_EQ(error_of([&] { dualgamal::mont_exp(ctx, 23, 2); }),
            Errc::OperandOutOfRange);
}

TEST(MontExp, CostIndependentOfExponent) {
  MontgomeryContext ctx(251, 8);
  std::vector<std::uint64_t> totals;
  for (unsigned e : {0u, 1u, 128u, 255u, 170u}) {
    CycleLedger ledger;
    dualgamal::mont_exp(ctx, 6, e, MulOverlap::Concurrent, &ledger);
    totals.push_back(ledger.total());
  }
  for (auto t : totals) EXPECT_EQ(t, totals.front());
  EXPECT_EQ(totals.front(), dualgamal::cost::mont_exp(8, true));

  CycleLedger serial;
  dualgamal::mont_exp(ctx, 6, 77, MulOverlap::Serial, &serial);
  EXPECT_EQ(serial.total(), dualgamal::cost::mont_exp(8, false));
  EXPECT_GT(serial.total(), totals.front());
}

TEST(ModDiv, Example) {
  MontgomeryContext ctx(23, 5);
  EXPECT_EQ(dualgamal::mod_div(ctx, 14, 6), 10);
}

TEST(ModDiv, ExhaustiveSmall) {
  for (unsigned m : {13u, 15u, 21u, 23u, 251u, 255u}) {
    MontgomeryContext ctx(m, 8);
    for (unsigned a = 0; a < m; ++a) {
      for (unsigned b = 0; b < m; ++b) {
        const auto want = oracle::div_mod(a, b, m);
        if (want) {
          ASSERT_EQ(dualgamal::mod_div(ctx, a, b), *want)
              << a << "/" << b << " mod " << m;
        } else {
          ASSERT_EQ(error_of([&] { dualgamal::mod_div(ctx, a, b); }),
                    Errc::NotInvertible)
              << a << "/" << b << " mod " << m;
        }
      }
    }
  }
}

TEST(ModDiv, RejectsUnreducedOperands) {
  MontgomeryContext ctx(23, 5);
  EXPECT_EQ(error_of([&] { dualgamal::mod_div(ctx, 14 + 23, 6); }),
            Errc::OperandOutOfRange);
  EXPECT_EQ(error_of([&] { dualgamal::mod_div(ctx, 14, 23 + 6); }),
            Errc::OperandOutOfRange);
}

struct WideCase {
  Nat modulus;
  unsigned width;
};

class RandomizedWide : public ::testing::TestWithParam<WideCase> {};

TEST_P(RandomizedWide, MatchesOracle) {
  const WideCase& c = GetParam();
  MontgomeryContext ctx(c.modulus, c.width);
  std::mt19937_64 rng(0x5eed + c.width);
  const Nat exp_bound = oracle::pow2(c.width);
  for (int i = 0; i < 300; ++i) {
    const Nat x = random_below(rng, c.modulus);
    const Nat y = random_below(rng, c.modulus);
    const Nat e = random_below(rng, exp_bound);
    ASSERT_EQ(dualgamal::mont_mul(ctx, x, y),
              oracle::mont_mul(x, y, c.modulus, c.width));
    ASSERT_EQ(dualgamal::mont_exp(ctx, x, e), oracle::pow_mod(x, e, c.modulus));
    const auto q = oracle::div_mod(x, y, c.modulus);
    if (q) {
      ASSERT_EQ(dualgamal::mod_div(ctx, x, y), *q);
    } else {
      ASSERT_EQ(error_of([&] { dualgamal::mod_div(ctx, x, y); }),
                Errc::NotInvertible);
    }
  }
}

Nat mersenne127() { return oracle::pow2(127) - 1; }

INSTANTIATE_TEST_SUITE_P(
    Widths, RandomizedWide,
    ::testing::Values(WideCase{Nat("18446744073709551557"), 64},  // 2^64 - 59
                      WideCase{Nat("9223372036854775783"), 63},
                      WideCase{Nat("18446744073709551615"), 64},  // odd composite
                      WideCase{Nat("79228162514264337593543950319"), 96},
                      WideCase{mersenne127(), 128},
                      WideCase{mersenne127(), 130},
                      WideCase{Nat("4294967291"), 40}));

TEST(CrtBasis, Construction) {
  CrtBasis basis({3, 5});
  EXPECT_EQ(basis.product(), 15);
  ASSERT_EQ(basis.partials().size(), 2u);
  EXPECT_EQ(basis.partials()[0].cofactor, 5);
  EXPECT_EQ(basis.partials()[0].inverse, 2);
  EXPECT_EQ(basis.partials()[1].cofactor, 3);
  EXPECT_EQ(basis.partials()[1].inverse, 2);
  EXPECT_EQ(basis.max_modulus(), 5);
}

TEST(CrtBasis, Rejects) {
  EXPECT_EQ(error_of([] { CrtBasis({}); }), Errc::InvalidParams);
  EXPECT_EQ(error_of([] { CrtBasis({3, 1}); }), Errc::InvalidParams);
  EXPECT_EQ(error_of([] { CrtBasis({2, 4}); }), Errc::NotCoprime);
  EXPECT_EQ(error_of([] { CrtBasis({3, 5, 9}); }), Errc::NotCoprime);
}

TEST(Crt, Example) {
  CrtBasis basis({3, 5});
  const std::vector<Nat> r = dualgamal::mod_reduce_vector(7, basis);
  EXPECT_EQ(r, (std::vector<Nat>{1, 2}));
  EXPECT_EQ(dualgamal::crt_recombine(r, basis), 7);
}

TEST(Crt, RoundTripAgainstSearch) {
  const std::vector<std::vector<Nat>> bases = {
      {3, 5}, {2, 3, 5}, {4, 9, 25}, {13, 14, 15}, {7, 11, 13}, {31, 32}};
  for (const auto& moduli : bases) {
    CrtBasis basis(moduli);
    std::vector<oracle::Int> om(moduli.begin(), moduli.end());
    for (Nat m = 0; m < basis.product(); ++m) {
      const auto r = dualgamal::mod_reduce_vector(m, basis);
      for (std::size_t i = 0; i < moduli.size(); ++i) {
        ASSERT_EQ(r[i], m % moduli[i]);
      }
      ASSERT_EQ(dualgamal::crt_recombine(r, basis), m);
      if (m < 200) ASSERT_EQ(*oracle::crt_search(r, om), m);
    }
  }
}

TEST(Crt, Errors) {
  CrtBasis basis({3, 5});
  const std::vector<Nat> short_r{1};
  const std::vector<Nat> big_r{3, 1};
  EXPECT_EQ(error_of([&] { dualgamal::crt_recombine(short_r, basis); }),
            Errc::LengthMismatch);
  EXPECT_EQ(error_of([&] { dualgamal::crt_recombine(big_r, basis); }),
            Errc::ResidueOutOfRange);
}

TEST(DlogSmall, InvertsExpBelowOrder) {
  for (auto [p, g] : {std::pair{23u, 5u}, std::pair{251u, 6u},
                      std::pair{23u, 2u}, std::pair{17u, 3u}}) {
    MontgomeryContext ctx(p, 8);
    const std::uint64_t ord = oracle::order(g, p);
    for (std::uint64_t e = 0; e < ord; ++e) {
      const Nat y = dualgamal::mont_exp(ctx, g, e);
      ASSERT_EQ(dualgamal::dlog_small(ctx, g, y, ord), e);
      ASSERT_EQ(*oracle::dlog(g, y, p, ord), e);
    }
  }
}

TEST(DlogSmall, NotFound) {
  MontgomeryContext ctx(23, 5);
  // 5^7 = 17 mod 23, outside a bound of 7.
  EXPECT_EQ(dualgamal::dlog_small(ctx, 5, 17, 8), 7u);
  EXPECT_EQ(error_of([&] { dualgamal::dlog_small(ctx, 5, 17, 7); }),
            Errc::NotFound);
  // 2 has order 11 mod 23, so 5 is never reached.
  EXPECT_EQ(error_of([&] { dualgamal::dlog_small(ctx, 2, 5, 22); }),
            Errc::NotFound);
  EXPECT_EQ(error_of([&] { dualgamal::dlog_small(ctx, 5, 0, 22); }),
            Errc::NotFound);
}

TEST(DlogSmall, ChargesPerStep) {
  MontgomeryContext ctx(23, 5);
  CycleLedger ledger;
  dualgamal::dlog_small(ctx, 5, 17, 22, &ledger);
  EXPECT_EQ(ledger.cycles(OpKind::DlogScan), dualgamal::cost::dlog_scan(5, 7));
}

TEST(CycleLedger, BreakdownSumsToTotal) {
  MontgomeryContext ctx(251, 8);
  CycleLedger ledger;
  dualgamal::mont_mul(ctx, 3, 4, &ledger);
  dualgamal::mod_mul(ctx, 3, 4, &ledger);
  dualgamal::mont_exp(ctx, 3, 4, MulOverlap::Serial, &ledger);
  dualgamal::mod_div(ctx, 3, 4, &ledger);
  std::uint64_t sum = 0;
  for (const auto& [kind, cycles] : ledger.breakdown()) sum += cycles;
  EXPECT_EQ(sum, ledger.total());
  EXPECT_EQ(ledger.cycles(OpKind::MontMul), dualgamal::cost::mont_mul(8));
  EXPECT_EQ(ledger.cycles(OpKind::ModMul), dualgamal::cost::mod_mul(8));
  EXPECT_EQ(ledger.cycles(OpKind::ModDiv), dualgamal::cost::mod_div(8));
  ledger.reset();
  EXPECT_EQ(ledger.total(), 0u);
}

}  // namespace
