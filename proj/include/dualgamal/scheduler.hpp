#ifndef DUALGAMAL_SCHEDULER_HPP_
#define DUALGAMAL_SCHEDULER_HPP_

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "dualgamal/cycle_ledger.hpp"
#include "dualgamal/modmath.hpp"

namespace dualgamal {

enum class Layout { Regular, Dual };

// Unit inventory the encryption controller may draw on. Regular layouts keep
// one unshared engine per scheme, so an encryption can use two multipliers
// and two exponentiators. The dual layout has exactly one of each, shared
// across both modes.
struct EngineConfig {
  Layout layout = Layout::Regular;
  unsigned multiplier_count = 2;
  unsigned exponentiator_count = 2;

  static EngineConfig regular() { return {Layout::Regular, 2, 2}; }
  static EngineConfig dual() { return {Layout::Dual, 1, 1}; }
};

const char* layout_name(Layout layout);

// The controller FSM: hands out unit time slots and charges them to an
// optional ledger. Results never depend on the configuration; only the
// ledger does.
//
// The decryption side is the same in both layouts (one exponentiator paired
// with one multiplier, one divider), so decrypt_exp always serialises the two
// products of a loop iteration.
class Scheduler {
 public:
  explicit Scheduler(EngineConfig config = EngineConfig::regular(),
                     CycleLedger* ledger = nullptr)
      : config_(config), ledger_(ledger) {}

  const EngineConfig& config() const { return config_; }
  CycleLedger* ledger() const { return ledger_; }

  // Encryption and key-generation side.
  Nat exp(const MontgomeryContext& ctx, const Nat& base, const Nat& e);
  // Two independent exponentiations. They overlap when two exponentiators
  // are available and serialise otherwise.
  std::pair<Nat, Nat> exp_pair(const MontgomeryContext& ctx, const Nat& b1,
                               const Nat& e1, const Nat& b2, const Nat& e2);
  Nat mul(const MontgomeryContext& ctx, const Nat& a, const Nat& b);
  std::vector<Nat> reduce(const MontgomeryContext& ctx, const Nat& m,
                          const CrtBasis& basis);

  // Decryption side.
  Nat decrypt_exp(const MontgomeryContext& ctx, const Nat& base, const Nat& e);
  Nat div(const MontgomeryContext& ctx, const Nat& a, const Nat& b);
  std::uint64_t dlog(const MontgomeryContext& ctx, const Nat& g, const Nat& y,
                     std::uint64_t bound);
  Nat recombine(const MontgomeryContext& ctx, std::span<const Nat> residues,
                const CrtBasis& basis);

 private:
  MulOverlap encrypt_overlap() const {
    return config_.multiplier_count >= 2 ? MulOverlap::Concurrent
                                         : MulOverlap::Serial;
  }

  EngineConfig config_;
  CycleLedger* ledger_;
};

}  // namespace dualgamal

#endif  // DUALGAMAL_SCHEDULER_HPP_
