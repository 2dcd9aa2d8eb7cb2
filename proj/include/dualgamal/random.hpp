#ifndef DUALGAMAL_RANDOM_HPP_
#define DUALGAMAL_RANDOM_HPP_

#include <cstdint>
#include <deque>
#include <initializer_list>
#include <random>

#include "dualgamal/nat.hpp"

namespace dualgamal {

// Source of the secret and ephemeral exponents. Each concurrent caller owns
// its own stream.
class RandomSource {
 public:
  virtual ~RandomSource() = default;

  // A value in [lo, hi].
  virtual Nat uniform(const Nat& lo, const Nat& hi) = 0;
};

// Deterministic stream: the same seed yields the same sequence of draws on
// every platform (mt19937_64 plus rejection sampling on whole words).
class SeededRandom final : public RandomSource {
 public:
  explicit SeededRandom(std::uint64_t seed) : engine_(seed) {}

  Nat uniform(const Nat& lo, const Nat& hi) override;

 private:
  std::mt19937_64 engine_;
};

// Replays a fixed script of values regardless of the requested range, so
// tests can pin k and l exactly (including degenerate values such as l = 0).
// Throws InvalidParams once the script is exhausted.
class ScriptedRandom final : public RandomSource {
 public:
  ScriptedRandom(std::initializer_list<Nat> values) : values_(values) {}
  template <typename It>
  ScriptedRandom(It first, It last) : values_(first, last) {}

  Nat uniform(const Nat& lo, const Nat& hi) override;

  std::size_t remaining() const { return values_.size(); }

 private:
  std::deque<Nat> values_;
};

}  // namespace dualgamal

#endif  // DUALGAMAL_RANDOM_HPP_
