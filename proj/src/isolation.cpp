#include "dualgamal/isolation.hpp"

#include <memory>
#include <sstream>
#include <type_traits>

#include "dualgamal/number_theory.hpp"

namespace dualgamal {

static_assert(std::is_same_v<decltype(ComponentRecord::value), Nat> &&
                  !std::is_constructible_v<PublicParams, ElGamalSecretKey>,
              "the IP boundary carries public data only");

namespace {

const ElGamalPublicKey& group_key(const PublicParams& params) {
  if (const auto* ceg = std::get_if<CegPublicKey>(&params)) return ceg->base();
  return std::get<ElGamalPublicKey>(params);
}

std::vector<Ciphertext*> flat_pairs(IpCiphertext& ct) {
  std::vector<Ciphertext*> out;
  if (auto* single = std::get_if<Ciphertext>(&ct)) {
    out.push_back(single);
  } else {
    for (Ciphertext& pair : std::get<CegCiphertext>(ct).pairs) {
      out.push_back(&pair);
    }
  }
  return out;
}

}  // namespace

const char* fold_op_name(FoldOp op) {
  return op == FoldOp::MultiplyFold ? "multiply-fold" : "add-fold";
}

const char* adversary_name(AdversaryKind kind) {
  switch (kind) {
    case AdversaryKind::Honest: return "honest";
    case AdversaryKind::Logger: return "logger";
    case AdversaryKind::Tamperer: return "tamperer";
  }
  return "unknown";
}

void IpTranscript::record_params(const PublicParams& p) {
  const ElGamalPublicKey& key = group_key(p);
  params.push_back({"n", key.n()});
  params.push_back({"g", key.g()});
  params.push_back({"h", key.h()});
  if (const auto* ceg = std::get_if<CegPublicKey>(&p)) {
    const auto& moduli = ceg->basis().moduli();
    for (std::size_t i = 0; i < moduli.size(); ++i) {
      params.push_back({"d" + std::to_string(i), moduli[i]});
    }
  }
}

void IpTranscript::record(Direction direction, std::size_t index,
                          const IpCiphertext& ct) {
  auto add = [&](std::size_t pair, const Ciphertext& c) {
    entries.push_back({direction, index, pair, Slot::C1, c.c1});
    entries.push_back({direction, index, pair, Slot::C2, c.c2});
  };
  if (const auto* single = std::get_if<Ciphertext>(&ct)) {
    add(0, *single);
    return;
  }
  const auto& pairs = std::get<CegCiphertext>(ct).pairs;
  for (std::size_t i = 0; i < pairs.size(); ++i) add(i, pairs[i]);
}

std::string IpTranscript::to_text() const {
  std::ostringstream out;
  for (const auto& p : params) {
    out << "param " << p.name << ' ' << to_decimal(p.value) << '\n';
  }
  for (const auto& e : entries) {
    out << (e.direction == Direction::Observed ? "observed" : "emitted")
        << " ct=" << e.ciphertext << " pair=" << e.pair << ' '
        << (e.slot == Slot::C1 ? "c1" : "c2") << ' ' << to_decimal(e.value)
        << '\n';
  }
  return out.str();
}

IpCiphertext fold(const PublicParams& params,
                  std::span<const IpCiphertext> inputs, FoldOp op) {
  if (inputs.empty()) {
    throw Error(Errc::InvalidParams, "nothing to fold");
  }
  if (op == FoldOp::MultiplyFold) {
    const auto* pk = std::get_if<ElGamalPublicKey>(&params);
    if (!pk) throw Error(Errc::SchemeMismatch, "multiply-fold needs an ElGamal key");
    Ciphertext acc = std::get<Ciphertext>(inputs.front());
    for (const auto& ct : inputs.subspan(1)) {
      acc = homomorphic_mul(*pk, acc, std::get<Ciphertext>(ct));
    }
    return acc;
  }
  const auto* pk = std::get_if<CegPublicKey>(&params);
  if (!pk) throw Error(Errc::SchemeMismatch, "add-fold needs a CEG key");
  CegCiphertext acc = std::get<CegCiphertext>(inputs.front());
  for (const auto& ct : inputs.subspan(1)) {
    acc = homomorphic_add(*pk, acc, std::get<CegCiphertext>(ct));
  }
  return acc;
}

IpCiphertext HonestIp::evaluate(const PublicParams& params,
                                std::span<const IpCiphertext> inputs,
                                FoldOp op) {
  return fold(params, inputs, op);
}

IpCiphertext LoggerIp::evaluate(const PublicParams& params,
                                std::span<const IpCiphertext> inputs,
                                FoldOp op) {
  if (captured_.params.empty()) captured_.record_params(params);
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    captured_.record(Direction::Observed, i, inputs[i]);
  }
  IpCiphertext out = HonestIp::evaluate(params, inputs, op);
  captured_.record(Direction::Emitted, 0, out);
  return out;
}

IpCiphertext TampererIp::evaluate(const PublicParams& params,
                                  std::span<const IpCiphertext> inputs,
                                  FoldOp op) {
  IpCiphertext out = HonestIp::evaluate(params, inputs, op);
  std::vector<Ciphertext*> pairs = flat_pairs(out);
  const std::size_t pair = spec_.component / 2;
  if (pair >= pairs.size()) {
    throw Error(Errc::InvalidParams, "tamper component out of range");
  }
  Nat& target = spec_.component % 2 == 0 ? pairs[pair]->c1 : pairs[pair]->c2;
  target = spec_.replacement;
  return out;
}

ScenarioOutcome run_scenario(const ScenarioConfig& config) {
  if (config.plaintexts.empty()) {
    throw Error(Errc::InvalidParams, "scenario needs at least one plaintext");
  }
  SeededRandom rng(config.seed);
  Engine engine(EngineConfig::dual());
  const bool additive = config.mode == EngineMode::Additive;

  std::optional<AnyPublicKey> pub;
  std::optional<ElGamalSecretKey> sec;
  Nat expected;
  if (additive) {
    CegKeyPair keys = engine.keygen(CegParams{config.group, config.moduli}, rng);
    const Nat depth_bound = dlog_bound(keys.pub.basis().max_modulus(),
                                       config.plaintexts.size() - 1);
    if (depth_bound > keys.pub.group_order()) {
      throw Error(Errc::InvalidParams,
                  std::to_string(config.plaintexts.size()) +
                      " inputs exceed the unique-decoding depth of ord(g) = " +
                      to_decimal(keys.pub.group_order()));
    }
    expected = 0;
    for (const Nat& m : config.plaintexts) expected += m;
    expected %= keys.pub.plaintext_bound();
    pub = std::move(keys.pub);
    sec = std::move(keys.sec);
  } else {
    KeyPair keys = engine.keygen(config.group, rng);
    expected = 1;
    for (const Nat& m : config.plaintexts) expected = (expected * m) % keys.pub.n();
    pub = std::move(keys.pub);
    sec = std::move(keys.sec);
  }

  std::vector<IpCiphertext> inputs;
  inputs.reserve(config.plaintexts.size());
  for (const Nat& m : config.plaintexts) {
    inputs.push_back(engine.encrypt(config.mode, *pub, m, rng));
  }

  ScenarioOutcome outcome{std::nullopt, expected, std::nullopt, {},
                          std::nullopt, *pub,     *sec};
  const FoldOp op = additive ? FoldOp::AddFold : FoldOp::MultiplyFold;

  std::unique_ptr<UntrustedIp> ip;
  LoggerIp* logger = nullptr;
  switch (config.adversary) {
    case AdversaryKind::Honest:
      ip = std::make_unique<HonestIp>();
      break;
    case AdversaryKind::Logger: {
      auto owned = std::make_unique<LoggerIp>();
      logger = owned.get();
      ip = std::move(owned);
      break;
    }
    case AdversaryKind::Tamperer: {
      TamperSpec spec;
      if (config.tamper) {
        spec = *config.tamper;
      } else {
        // Pick C2 of one pair and multiply it by g: the recovered value is
        // shifted by g, so the plaintext always moves.
        IpCiphertext honest = fold(*pub, inputs, op);
        std::vector<Ciphertext*> pairs = flat_pairs(honest);
        const std::size_t pair = config.seed % pairs.size();
        const ElGamalPublicKey& key = group_key(*pub);
        spec.component = 2 * pair + 1;
        spec.replacement = mod_mul(key.context(), pairs[pair]->c2, key.g());
      }
      ip = std::make_unique<TampererIp>(std::move(spec));
      break;
    }
  }

  outcome.transcript.record_params(*pub);
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    outcome.transcript.record(Direction::Observed, i, inputs[i]);
  }
  const IpCiphertext returned = ip->evaluate(*pub, inputs, op);
  outcome.transcript.record(Direction::Emitted, 0, returned);
  if (logger) outcome.captured = logger->captured();

  try {
    outcome.result = engine.decrypt(config.mode, *pub, *sec, returned);
  } catch (const Error& e) {
    outcome.error = Error(Errc::VerificationMismatch,
                          std::string("IP output failed to decrypt (") +
                              e.what() + ")");
    return outcome;
  }
  if (*outcome.result != expected) {
    outcome.error = Error(Errc::VerificationMismatch,
                          "expected " + to_decimal(expected) + ", decrypted " +
                              to_decimal(*outcome.result));
  }
  return outcome;
}

std::string AuditVerdict::summary() const {
  std::ostringstream out;
  out << (ciphertext_only ? "ciphertext-only" : "NOT ciphertext-only") << ", "
      << entry_count << " entries";
  for (const auto& c : collisions) {
    out << "; entry " << c.entry << " equals a "
        << (c.with == Collision::With::Plaintext ? "plaintext" : "secret-key")
        << " value " << to_decimal(c.value) << " (collision, not exposure)";
  }
  return out.str();
}

AuditVerdict audit_transcript(const IpTranscript& transcript,
                              std::span<const Nat> plaintexts,
                              const ElGamalSecretKey& sk) {
  AuditVerdict verdict;
  verdict.entry_count = transcript.entries.size();

  // Entries are ComponentRecords by type; a value can only be a ciphertext
  // component if it is a residue modulo the published n.
  const Nat* n = nullptr;
  for (const auto& p : transcript.params) {
    if (p.name == "n") n = &p.value;
  }
  verdict.ciphertext_only = n != nullptr;
  for (std::size_t i = 0; i < transcript.entries.size(); ++i) {
    const Nat& v = transcript.entries[i].value;
    if (n && (v < 0 || v >= *n)) verdict.ciphertext_only = false;
    for (const Nat& m : plaintexts) {
      if (v == m) {
        verdict.collisions.push_back({i, Collision::With::Plaintext, v});
        break;
      }
    }
    if (v == sk.k()) {
      verdict.collisions.push_back({i, Collision::With::SecretKey, v});
    }
  }
  return verdict;
}

}  // namespace dualgamal
