#include "dualgamal/scheduler.hpp"

namespace dualgamal {

const char* layout_name(Layout layout) {
  return layout == Layout::Regular ? "regular" : "dual";
}

Nat Scheduler::exp(const MontgomeryContext& ctx, const Nat& base,
                   const Nat& e) {
  return mont_exp(ctx, base, e, encrypt_overlap(), ledger_);
}

std::pair<Nat, Nat> Scheduler::exp_pair(const MontgomeryContext& ctx,
                                        const Nat& b1, const Nat& e1,
                                        const Nat& b2, const Nat& e2) {
  if (config_.exponentiator_count < 2) {
    Nat first = exp(ctx, b1, e1);
    return {std::move(first), exp(ctx, b2, e2)};
  }
  // Both runs start together and take the same data-independent time, so
  // the pair costs one run.
  Nat first = mont_exp(ctx, b1, e1, encrypt_overlap(), ledger_);
  return {std::move(first), mont_exp(ctx, b2, e2, encrypt_overlap())};
}

Nat Scheduler::mul(const MontgomeryContext& ctx, const Nat& a, const Nat& b) {
  return mod_mul(ctx, a, b, ledger_);
}

std::vector<Nat> Scheduler::reduce(const MontgomeryContext& ctx, const Nat& m,
                                   const CrtBasis& basis) {
  if (ledger_) {
    ledger_->charge(OpKind::ModReduce,
                    basis.size() * cost::mod_reduce(ctx.width()));
  }
  return mod_reduce_vector(m, basis);
}

Nat Scheduler::decrypt_exp(const MontgomeryContext& ctx, const Nat& base,
                           const Nat& e) {
  return mont_exp(ctx, base, e, MulOverlap::Serial, ledger_);
}

Nat Scheduler::div(const MontgomeryContext& ctx, const Nat& a, const Nat& b) {
  return mod_div(ctx, a, b, ledger_);
}

std::uint64_t Scheduler::dlog(const MontgomeryContext& ctx, const Nat& g,
                              const Nat& y, std::uint64_t bound) {
  return dlog_small(ctx, g, y, bound, ledger_);
}

Nat Scheduler::recombine(const MontgomeryContext& ctx,
                         std::span<const Nat> residues, const CrtBasis& basis) {
  if (ledger_) {
    ledger_->charge(OpKind::CrtRecombine,
                    cost::crt_recombine(ctx.width(), residues.size()));
  }
  return crt_recombine(residues, basis);
}

}  // namespace dualgamal
