#ifndef DUALGAMAL_CYCLE_LEDGER_HPP_
#define DUALGAMAL_CYCLE_LEDGER_HPP_

#include <cstdint>
#include <map>
#include <string>

namespace dualgamal {

enum class OpKind {
  MontMul,       // one Montgomery product
  ModMul,        // ordinary-domain product (two Montgomery products)
  MontExp,       // one exponentiator run, or a concurrent pair of runs
  ModDiv,        // plus-minus divider
  ModReduce,     // residue reducer, per residue
  CrtRecombine,  // inverse CRT accumulation
  DlogScan,      // small discrete-log scan
};

const char* op_kind_name(OpKind kind);

// Abstract time-slot accounting for one engine. Counts only ever grow; the
// total is the sum of the per-kind breakdown.
class CycleLedger {
 public:
  void charge(OpKind kind, std::uint64_t cycles);

  std::uint64_t total() const { return total_; }
  std::uint64_t cycles(OpKind kind) const;
  const std::map<OpKind, std::uint64_t>& breakdown() const { return by_kind_; }

  void reset();

 private:
  std::uint64_t total_ = 0;
  std::map<OpKind, std::uint64_t> by_kind_;
};

// Cost model, in abstract cycles, for a datapath of the given operand width.
// These constants are modelling choices; only orderings and ratios between
// layouts are meaningful.
namespace cost {

// Bit-serial multiplier: one add/shift step per operand bit plus the final
// conditional subtraction and a load slot.
constexpr std::uint64_t mont_mul(unsigned width) { return width + 2ULL; }

constexpr std::uint64_t mod_mul(unsigned width) { return 2 * mont_mul(width); }

// `width` loop iterations. With two multipliers the square and the
// conditional accumulate of an iteration share one slot; with one they take
// two. Two more products convert the base in and the result out.
constexpr std::uint64_t mont_exp(unsigned width, bool overlapped) {
  const std::uint64_t slots_per_iteration = overlapped ? 1 : 2;
  return (width * slots_per_iteration + 2) * mont_mul(width);
}

constexpr std::uint64_t mod_div(unsigned width) { return 2ULL * width + 4; }

constexpr std::uint64_t mod_reduce(unsigned width) { return width; }

// One product and one accumulate per residue.
constexpr std::uint64_t crt_recombine(unsigned width, std::uint64_t residues) {
  return residues * (mont_mul(width) + 1);
}

// Two domain conversions plus one product per scan step.
constexpr std::uint64_t dlog_scan(unsigned width, std::uint64_t steps) {
  return (steps + 2) * mont_mul(width);
}

}  // namespace cost

}  // namespace dualgamal

#endif  // DUALGAMAL_CYCLE_LEDGER_HPP_
