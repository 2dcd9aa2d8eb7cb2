#ifndef DUALGAMAL_SERIALIZE_HPP_
#define DUALGAMAL_SERIALIZE_HPP_

#include <optional>
#include <string>
#include <string_view>

#include "dualgamal/dual_engine.hpp"

namespace dualgamal {

// Key and ciphertext files are JSON objects with magnitudes as minimal
// lowercase hex strings.
//
//   {"scheme":"elgamal","n":..,"g":..,"h":..}            public key
//   {"scheme":"ceg","n":..,"g":..,"h":..,"d":[..]}       public key
//   ... plus "k" in secret key files
//   {"scheme":"elgamal","c1":..,"c2":..}                 ciphertext
//   {"scheme":"ceg","pairs":[{"c1":..,"c2":..}],"add_count":N}
//
// Output is byte-stable: fixed key order, two-space indent, trailing newline.

struct LoadedKey {
  AnyPublicKey pub;
  std::optional<ElGamalSecretKey> sec;
};

const char* scheme_tag(const AnyPublicKey& pk);

std::string serialize_key(const AnyPublicKey& pk,
                          const ElGamalSecretKey* sk = nullptr);
// Throws MalformedFile, or the key constructors' InvalidParams/NotCoprime.
LoadedKey parse_key(std::string_view text);

std::string serialize_ciphertext(const AnyCiphertext& ct);
// Throws MalformedFile; SchemeMismatch when the tag differs from the key's;
// CiphertextMalformed when the pair count differs from the key's basis.
AnyCiphertext parse_ciphertext(std::string_view text, const AnyPublicKey& pk);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

}  // namespace dualgamal

#endif  // DUALGAMAL_SERIALIZE_HPP_
