#include <gtest/gtest.h>

#include "dualgamal/error.hpp"
#include "dualgamal/serialize.hpp"

namespace {

using dualgamal::AnyCiphertext;
using dualgamal::AnyPublicKey;
using dualgamal::CegCiphertext;
using dualgamal::CegPublicKey;
using dualgamal::Ciphertext;
using dualgamal::CrtBasis;
using dualgamal::ElGamalPublicKey;
using dualgamal::ElGamalSecretKey;
using dualgamal::Errc;
using dualgamal::Error;

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

const ElGamalPublicKey pk23(23, 5, 8);
const ElGamalSecretKey sk6(6);
const CegPublicKey ceg15(pk23, CrtBasis({3, 5}));

TEST(Serialize, ElGamalKeyFormat) {
  EXPECT_EQ(dualgamal::serialize_key(pk23),
            "{\n  \"scheme\": \"elgamal\",\n  \"n\": \"17\",\n  \"g\": \"5\",\n"
            "  \"h\": \"8\"\n}\n");
  const std::string sec = dualgamal::serialize_key(pk23, &sk6);
  EXPECT_NE(sec.find("\"k\": \"6\""), std::string::npos);
}

TEST(Serialize, CegKeyCarriesBasis) {
  const std::string text = dualgamal::serialize_key(ceg15);
  EXPECT_NE(text.find("\"scheme\": \"ceg\""), std::string::npos);
  EXPECT_NE(text.find("\"d\": [\n    \"3\",\n    \"5\"\n  ]"), std::string::npos);
}

TEST(Serialize, KeyRoundTrip) {
  for (const AnyPublicKey& pk : {AnyPublicKey(pk23), AnyPublicKey(ceg15)}) {
    const auto pub_only = dualgamal::parse_key(dualgamal::serialize_key(pk));
    EXPECT_TRUE(pub_only.pub == pk);
    EXPECT_FALSE(pub_only.sec);
    const auto with_sec = dualgamal::parse_key(dualgamal::serialize_key(pk, &sk6));
    EXPECT_TRUE(with_sec.pub == pk);
    ASSERT_TRUE(with_sec.sec);
    EXPECT_EQ(*with_sec.sec, sk6);
  }
}

TEST(Serialize, CiphertextRoundTrip) {
  const AnyCiphertext single = Ciphertext{10, 14};
  EXPECT_EQ(dualgamal::serialize_ciphertext(single),
            "{\n  \"scheme\": \"elgamal\",\n  \"c1\": \"a\",\n  \"c2\": \"e\"\n}\n");
  EXPECT_TRUE(dualgamal::parse_ciphertext(dualgamal::serialize_ciphertext(single),
                                          pk23) == single);
  const AnyCiphertext pairs = CegCiphertext{{{2, 21}, {10, 12}}, 3};
  EXPECT_TRUE(dualgamal::parse_ciphertext(dualgamal::serialize_ciphertext(pairs),
                                          ceg15) == pairs);
}

TEST(Serialize, SchemeTagSafety) {
  const std::string single = dualgamal::serialize_ciphertext(Ciphertext{10, 14});
  const std::string pairs =
      dualgamal::serialize_ciphertext(CegCiphertext{{{2, 21}, {10, 12}}, 0});
  EXPECT_EQ(error_of([&] { dualgamal::parse_ciphertext(single, ceg15); }),
            Errc::SchemeMismatch);
  EXPECT_EQ(error_of([&] { dualgamal::parse_ciphertext(pairs, pk23); }),
            Errc::SchemeMismatch);
}

TEST(Serialize, PairCountMustMatchBasis) {
  const std::string one =
      dualgamal::serialize_ciphertext(CegCiphertext{{{2, 21}}, 0});
  EXPECT_EQ(error_of([&] { dualgamal::parse_ciphertext(one, ceg15); }),
            Errc::CiphertextMalformed);
}

TEST(Serialize, MalformedInputs) {
  for (const char* text : {
           "",
           "not json",
           "[]",
           R"({"scheme":"elgamal","n":"17","g":"5"})",
           R"({"scheme":"elgamal","n":"0x17","g":"5","h":"8"})",
           R"({"scheme":"elgamal","n":"17","g":"5","h":"08"})",
           R"({"scheme":"elgamal","n":"17","g":"5","h":"8","d":["3"]})",
           R"({"scheme":"ceg","n":"17","g":"5","h":"8"})",
           R"({"scheme":"rsa","n":"17","g":"5","h":"8"})",
           R"({"scheme":"elgamal","n":17,"g":"5","h":"8"})",
       }) {
    EXPECT_THROW(dualgamal::parse_key(text), Error) << text;
  }
  EXPECT_EQ(error_of([] { dualgamal::parse_key(R"({"scheme":"elgamal","n":"16","g":"5","h":"8"})"); }),
            Errc::InvalidParams);
  EXPECT_EQ(error_of([] {
              dualgamal::parse_ciphertext(R"({"scheme":"elgamal","c1":"A","c2":"e"})", pk23);
            }),
            Errc::MalformedFile);
}

}  // namespace
