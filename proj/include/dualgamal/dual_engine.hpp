#ifndef DUALGAMAL_DUAL_ENGINE_HPP_
#define DUALGAMAL_DUAL_ENGINE_HPP_

#include <array>
#include <string>
#include <variant>

#include "dualgamal/ceg.hpp"
#include "dualgamal/cycle_ledger.hpp"
#include "dualgamal/elgamal.hpp"
#include "dualgamal/scheduler.hpp"

namespace dualgamal {

// Select signal of the shared datapath.
enum class EngineMode { Multiplicative, Additive };

const char* mode_name(EngineMode mode);

using AnyPublicKey = std::variant<ElGamalPublicKey, CegPublicKey>;
using AnyCiphertext = std::variant<Ciphertext, CegCiphertext>;

// One arithmetic engine serving both schemes. Single-owner: the engine and
// its ledger must not be shared between threads without external locking.
//
// Ciphertexts and plaintexts are bit-identical to the standalone scheme
// functions given the same randomness; only the ledger reflects the layout.
class Engine {
 public:
  explicit Engine(EngineConfig config) : config_(config) {}

  const EngineConfig& config() const { return config_; }
  const CycleLedger& ledger() const { return ledger_; }
  void reset_ledger() { ledger_.reset(); }

  KeyPair keygen(const GroupParams& params, RandomSource& rng);
  CegKeyPair keygen(const CegParams& params, RandomSource& rng);

  // Throws SchemeMismatch when the key does not belong to `mode`.
  AnyCiphertext encrypt(EngineMode mode, const AnyPublicKey& pk, const Nat& m,
                        RandomSource& rng);
  Nat decrypt(EngineMode mode, const AnyPublicKey& pk,
              const ElGamalSecretKey& sk, const AnyCiphertext& ct);

 private:
  Scheduler scheduler() { return Scheduler(config_, &ledger_); }

  EngineConfig config_;
  CycleLedger ledger_;
};

enum class UnitClass {
  Multiplier,
  Exponentiator,
  Divider,
  Adder,
  Reducer,
  MemoryBlock,
};

inline constexpr std::array<UnitClass, 6> kUnitClasses = {
    UnitClass::Multiplier, UnitClass::Exponentiator, UnitClass::Divider,
    UnitClass::Adder,      UnitClass::Reducer,       UnitClass::MemoryBlock};

const char* unit_class_name(UnitClass unit);

// Static unit inventory of a layout.
struct ResourceReport {
  unsigned multipliers = 0;
  unsigned exponentiators = 0;
  unsigned dividers = 0;
  unsigned adders = 0;
  unsigned reducers = 0;
  unsigned memory_blocks = 0;

  unsigned count(UnitClass unit) const;
  friend bool operator==(const ResourceReport&, const ResourceReport&) = default;
};

// Regular: one unshared engine per scheme. Dual: a single shared engine.
ResourceReport resource_report(const EngineConfig& config);

// (regular - dual) / regular * 100. Negative when dual is larger. Throws
// DivisionByZero when regular is not positive.
double reduction_percent(double regular, double dual);

// Per-unit-class reduction between two inventories.
std::array<double, kUnitClasses.size()> reduction_percent(
    const ResourceReport& regular, const ResourceReport& dual);

}  // namespace dualgamal

#endif  // DUALGAMAL_DUAL_ENGINE_HPP_
