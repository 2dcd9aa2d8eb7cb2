#include "dualgamal/serialize.hpp"

#include <fstream>
#include <sstream>

#include "dualgamal/error.hpp"
#include "json.hpp"

namespace dualgamal {

using json = nlohmann::ordered_json;

namespace {

[[noreturn]] void malformed(const std::string& what) {
  throw Error(Errc::MalformedFile, what);
}

json parse_object(std::string_view text) {
  json j = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded() || !j.is_object()) malformed("not a JSON object");
  return j;
}

Nat hex_field(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end() || !it->is_string()) {
    malformed(std::string("missing hex field '") + key + "'");
  }
  return from_hex(it->get<std::string>());
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json pair_json(const Ciphertext& c) {
  json j;
  j["c1"] = to_hex(c.c1);
  j["c2"] = to_hex(c.c2);
  return j;
}

}  // namespace

const char* scheme_tag(const AnyPublicKey& pk) {
  return std::holds_alternative<ElGamalPublicKey>(pk) ? "elgamal" : "ceg";
}

std::string serialize_key(const AnyPublicKey& pk, const ElGamalSecretKey* sk) {
  const ElGamalPublicKey& base =
      std::holds_alternative<CegPublicKey>(pk)
          ? std::get<CegPublicKey>(pk).base()
          : std::get<ElGamalPublicKey>(pk);
  json j;
  j["scheme"] = scheme_tag(pk);
  j["n"] = to_hex(base.n());
  j["g"] = to_hex(base.g());
  j["h"] = to_hex(base.h());
  if (const auto* ceg = std::get_if<CegPublicKey>(&pk)) {
    json d = json::array();
    for (const Nat& m : ceg->basis().moduli()) d.push_back(to_hex(m));
    j["d"] = std::move(d);
  }
  if (sk) j["k"] = to_hex(sk->k());
  return dump(j);
}

LoadedKey parse_key(std::string_view text) {
  const json j = parse_object(text);
  const auto scheme = j.value("scheme", std::string());
  if (scheme != "elgamal" && scheme != "ceg") {
    malformed("unknown scheme '" + scheme + "'");
  }
  const bool has_d = j.contains("d");
  if (has_d != (scheme == "ceg")) {
    malformed("field 'd' must be present exactly for ceg keys");
  }
  ElGamalPublicKey base(hex_field(j, "n"), hex_field(j, "g"),
                        hex_field(j, "h"));
  std::optional<ElGamalSecretKey> sec;
  if (j.contains("k")) {
    Nat k = hex_field(j, "k");
    if (k < 1 || k >= base.n() - 1) malformed("secret exponent out of range");
    sec.emplace(std::move(k));
  }
  if (scheme == "elgamal") return LoadedKey{std::move(base), std::move(sec)};

  const json& d = j.at("d");
  if (!d.is_array()) malformed("field 'd' must be an array");
  std::vector<Nat> moduli;
  for (const auto& entry : d) {
    if (!entry.is_string()) malformed("field 'd' must hold hex strings");
    moduli.push_back(from_hex(entry.get<std::string>()));
  }
  return LoadedKey{CegPublicKey(std::move(base), CrtBasis(std::move(moduli))),
                   std::move(sec)};
}

std::string serialize_ciphertext(const AnyCiphertext& ct) {
  json j;
  if (const auto* single = std::get_if<Ciphertext>(&ct)) {
    j["scheme"] = "elgamal";
    j["c1"] = to_hex(single->c1);
    j["c2"] = to_hex(single->c2);
    return dump(j);
  }
  const auto& ceg = std::get<CegCiphertext>(ct);
  j["scheme"] = "ceg";
  json pairs = json::array();
  for (const Ciphertext& c : ceg.pairs) pairs.push_back(pair_json(c));
  j["pairs"] = std::move(pairs);
  j["add_count"] = ceg.add_count;
  return dump(j);
}

AnyCiphertext parse_ciphertext(std::string_view text, const AnyPublicKey& pk) {
  const json j = parse_object(text);
  const auto scheme = j.value("scheme", std::string());
  if (scheme != "elgamal" && scheme != "ceg") {
    malformed("unknown scheme '" + scheme + "'");
  }
  if (scheme != scheme_tag(pk)) {
    throw Error(Errc::SchemeMismatch, scheme + " ciphertext used with a " +
                                          scheme_tag(pk) + " key");
  }
  if (scheme == "elgamal") {
    return Ciphertext{hex_field(j, "c1"), hex_field(j, "c2")};
  }
  auto pairs = j.find("pairs");
  auto count = j.find("add_count");
  if (pairs == j.end() || !pairs->is_array()) malformed("missing 'pairs'");
  if (count == j.end() || !count->is_number_unsigned()) {
    malformed("missing non-negative 'add_count'");
  }
  CegCiphertext ct;
  ct.add_count = count->get<std::uint64_t>();
  for (const auto& p : *pairs) {
    if (!p.is_object()) malformed("pair entries must be objects");
    ct.pairs.push_back(Ciphertext{hex_field(p, "c1"), hex_field(p, "c2")});
  }
  const auto& basis = std::get<CegPublicKey>(pk).basis();
  if (ct.pairs.size() != basis.size()) {
    throw Error(Errc::CiphertextMalformed,
                "ciphertext has " + std::to_string(ct.pairs.size()) +
                    " pairs, key basis has " + std::to_string(basis.size()));
  }
  return ct;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) malformed("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out || !(out << contents)) malformed("cannot write '" + path + "'");
}

}  // namespace dualgamal
