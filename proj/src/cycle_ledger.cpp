#include "dualgamal/cycle_ledger.hpp"

namespace dualgamal {

const char* op_kind_name(OpKind kind) {
  switch (kind) {
    case OpKind::MontMul: return "mont_mul";
    case OpKind::ModMul: return "mod_mul";
    case OpKind::MontExp: return "mont_exp";
    case OpKind::ModDiv: return "mod_div";
    case OpKind::ModReduce: return "mod_reduce";
    case OpKind::CrtRecombine: return "crt_recombine";
    case OpKind::DlogScan: return "dlog_scan";
  }
  return "unknown";
}

void CycleLedger::charge(OpKind kind, std::uint64_t cycles) {
  by_kind_[kind] += cycles;
  total_ += cycles;
}

std::uint64_t CycleLedger::cycles(OpKind kind) const {
  auto it = by_kind_.find(kind);
  return it == by_kind_.end() ? 0 : it->second;
}

void CycleLedger::reset() {
  total_ = 0;
  by_kind_.clear();
}

}  // namespace dualgamal
