#include "dualgamal/dual_engine.hpp"

#include "dualgamal/error.hpp"

namespace dualgamal {

namespace {

template <typename Key>
const Key& key_for(EngineMode mode, const AnyPublicKey& pk) {
  const Key* key = std::get_if<Key>(&pk);
  if (!key) {
    throw Error(Errc::SchemeMismatch, std::string("key does not match ") +
                                          mode_name(mode) + " mode");
  }
  return *key;
}

template <typename Ct>
const Ct& ciphertext_for(EngineMode mode, const AnyCiphertext& ct) {
  const Ct* c = std::get_if<Ct>(&ct);
  if (!c) {
    throw Error(Errc::SchemeMismatch, std::string("ciphertext does not match ") +
                                          mode_name(mode) + " mode");
  }
  return *c;
}

}  // namespace

const char* mode_name(EngineMode mode) {
  return mode == EngineMode::Multiplicative ? "multiplicative" : "additive";
}

KeyPair Engine::keygen(const GroupParams& params, RandomSource& rng) {
  Scheduler sched = scheduler();
  return dualgamal::keygen(params, rng, sched);
}

CegKeyPair Engine::keygen(const CegParams& params, RandomSource& rng) {
  Scheduler sched = scheduler();
  return ceg_keygen(params, rng, sched);
}

AnyCiphertext Engine::encrypt(EngineMode mode, const AnyPublicKey& pk,
                              const Nat& m, RandomSource& rng) {
  Scheduler sched = scheduler();
  if (mode == EngineMode::Multiplicative) {
    return dualgamal::encrypt(key_for<ElGamalPublicKey>(mode, pk), m, rng,
                              sched);
  }
  return ceg_encrypt(key_for<CegPublicKey>(mode, pk), m, rng, sched);
}

Nat Engine::decrypt(EngineMode mode, const AnyPublicKey& pk,
                    const ElGamalSecretKey& sk, const AnyCiphertext& ct) {
  Scheduler sched = scheduler();
  if (mode == EngineMode::Multiplicative) {
    return dualgamal::decrypt(key_for<ElGamalPublicKey>(mode, pk), sk,
                              ciphertext_for<Ciphertext>(mode, ct), sched);
  }
  return ceg_decrypt(key_for<CegPublicKey>(mode, pk), sk,
                     ciphertext_for<CegCiphertext>(mode, ct), sched);
}

const char* unit_class_name(UnitClass unit) {
  switch (unit) {
    case UnitClass::Multiplier: return "multipliers";
    case UnitClass::Exponentiator: return "exponentiators";
    case UnitClass::Divider: return "dividers";
    case UnitClass::Adder: return "adders";
    case UnitClass::Reducer: return "reducers";
    case UnitClass::MemoryBlock: return "memory_blocks";
  }
  return "unknown";
}

unsigned ResourceReport::count(UnitClass unit) const {
  switch (unit) {
    case UnitClass::Multiplier: return multipliers;
    case UnitClass::Exponentiator: return exponentiators;
    case UnitClass::Divider: return dividers;
    case UnitClass::Adder: return adders;
    case UnitClass::Reducer: return reducers;
    case UnitClass::MemoryBlock: return memory_blocks;
  }
  return 0;
}

ResourceReport resource_report(const EngineConfig& config) {
  const unsigned engines = config.layout == Layout::Regular ? 2 : 1;
  ResourceReport r;
  r.multipliers = config.multiplier_count;
  r.exponentiators = config.exponentiator_count;
  r.dividers = engines;
  // CRT accumulation, residue reduction and the inverse-CRT table exist only
  // on the additive path.
  r.adders = 1;
  r.reducers = 1;
  r.memory_blocks = 1;
  return r;
}

double reduction_percent(double regular, double dual) {
  if (!(regular > 0)) {
    throw Error(Errc::DivisionByZero, "regular value must be positive");
  }
  return (regular - dual) / regular * 100.0;
}

std::array<double, kUnitClasses.size()> reduction_percent(
    const ResourceReport& regular, const ResourceReport& dual) {
  std::array<double, kUnitClasses.size()> out{};
  for (std::size_t i = 0; i < kUnitClasses.size(); ++i) {
    out[i] = reduction_percent(regular.count(kUnitClasses[i]),
                               dual.count(kUnitClasses[i]));
  }
  return out;
}

}  // namespace dualgamal
