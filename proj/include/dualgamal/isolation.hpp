#ifndef DUALGAMAL_ISOLATION_HPP_
#define DUALGAMAL_ISOLATION_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dualgamal/dual_engine.hpp"
#include "dualgamal/error.hpp"

namespace dualgamal {

// Blind evaluation by an untrusted third-party block. The block is handed
// public parameters and ciphertexts, folds them with the scheme's homomorphic
// operation and hands one ciphertext back. Its interface has no slot for a
// secret key or a plaintext.

enum class FoldOp { MultiplyFold, AddFold };
enum class AdversaryKind { Honest, Logger, Tamperer };

const char* fold_op_name(FoldOp op);
const char* adversary_name(AdversaryKind kind);

using PublicParams = AnyPublicKey;
using IpCiphertext = AnyCiphertext;

enum class Direction { Observed, Emitted };
enum class Slot { C1, C2 };

// One ciphertext component crossing the IP boundary.
struct ComponentRecord {
  Direction direction;
  std::size_t ciphertext;  // index among inputs, or 0 for the output
  std::size_t pair;        // 0 for multiplicative ciphertexts
  Slot slot;
  Nat value;
};

struct PublicParamRecord {
  std::string name;
  Nat value;
};

struct IpTranscript {
  std::vector<PublicParamRecord> params;
  std::vector<ComponentRecord> entries;

  void record_params(const PublicParams& params);
  void record(Direction direction, std::size_t index, const IpCiphertext& ct);

  // Line-oriented log, one value per line.
  std::string to_text() const;
};

class UntrustedIp {
 public:
  virtual ~UntrustedIp() = default;

  virtual IpCiphertext evaluate(const PublicParams& params,
                                std::span<const IpCiphertext> inputs,
                                FoldOp op) = 0;
};

// Folds honestly.
class HonestIp : public UntrustedIp {
 public:
  IpCiphertext evaluate(const PublicParams& params,
                        std::span<const IpCiphertext> inputs,
                        FoldOp op) override;
};

// Folds honestly and keeps a copy of everything it saw and sent.
class LoggerIp : public HonestIp {
 public:
  IpCiphertext evaluate(const PublicParams& params,
                        std::span<const IpCiphertext> inputs,
                        FoldOp op) override;

  const IpTranscript& captured() const { return captured_; }

 private:
  IpTranscript captured_;
};

// Replaces exactly one component of the output. Components are indexed
// flat as C1 of pair 0, C2 of pair 0, C1 of pair 1, and so on.
struct TamperSpec {
  std::size_t component = 1;
  Nat replacement;
};

class TampererIp : public HonestIp {
 public:
  explicit TampererIp(TamperSpec spec) : spec_(std::move(spec)) {}

  IpCiphertext evaluate(const PublicParams& params,
                        std::span<const IpCiphertext> inputs,
                        FoldOp op) override;

 private:
  TamperSpec spec_;
};

// Fold with the public key alone. Throws InvalidParams on an empty input
// list or when `op` does not fit the key.
IpCiphertext fold(const PublicParams& params,
                  std::span<const IpCiphertext> inputs, FoldOp op);

struct ScenarioConfig {
  EngineMode mode = EngineMode::Multiplicative;
  std::vector<Nat> plaintexts;
  AdversaryKind adversary = AdversaryKind::Honest;
  std::uint64_t seed = 1;
  GroupParams group{Nat(23), Nat(5)};
  // CRT basis for the additive mode.
  std::vector<Nat> moduli{Nat(3), Nat(5)};
  // Tamperer only. When unset, C2 of pair (seed mod t) is multiplied by g,
  // which always shifts the plaintext.
  std::optional<TamperSpec> tamper;
};

struct ScenarioOutcome {
  std::optional<Nat> result;  // decrypted IP output, when decryption succeeded
  Nat expected;               // product mod n, or sum mod D
  std::optional<Error> error;  // VerificationMismatch
  IpTranscript transcript;     // what crossed the boundary
  std::optional<IpTranscript> captured;  // the Logger's own copy
  AnyPublicKey public_key;
  ElGamalSecretKey secret_key;
};

// Generates keys from `seed`, encrypts the plaintexts, lets the chosen IP
// fold them and decrypts its answer. The comparison with the recomputed
// expected value is a test oracle that needs the plaintexts; it is not a
// deployable Trojan detector.
//
// Throws for invalid plaintexts or parameters, including additive runs whose
// input count exceeds the unique-decoding depth.
ScenarioOutcome run_scenario(const ScenarioConfig& config);

struct Collision {
  std::size_t entry;
  enum class With { Plaintext, SecretKey } with;
  Nat value;
};

struct AuditVerdict {
  bool ciphertext_only = false;
  std::size_t entry_count = 0;
  // Numeric coincidences only. A small modulus makes them unavoidable; they
  // are collisions, not exposure.
  std::vector<Collision> collisions;

  std::string summary() const;
};

AuditVerdict audit_transcript(const IpTranscript& transcript,
                              std::span<const Nat> plaintexts,
                              const ElGamalSecretKey& sk);

}  // namespace dualgamal

#endif  // DUALGAMAL_ISOLATION_HPP_
