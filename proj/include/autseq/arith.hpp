#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "autseq/dfa.hpp"
#include "autseq/dfao.hpp"
#include "autseq/witness.hpp"

namespace autseq {

/// Comparison of the low-order digit prefixes of two numbers read so far.
enum class Flag : std::uint8_t { LT, EQ, GT };

/// Folds one more (more significant) digit pair into the flag.
constexpr Flag flag_update(Flag b, Digit i, Digit n) noexcept {
  switch (b) {
    case Flag::LT:
      return i <= n ? Flag::LT : Flag::GT;
    case Flag::EQ:
      return i < n ? Flag::LT : (i == n ? Flag::EQ : Flag::GT);
    case Flag::GT:
      return i < n ? Flag::LT : Flag::GT;
  }
  return b;
}

enum class CompareOp { LT, LE, EQ, NE, GE, GT };

/// Two tracks (x, y): accepts iff x op y.
Dfa rel_compare(unsigned base, CompareOp op);
/// Three tracks (x, y, z): accepts iff x + y = z. Carry is at most 1.
Dfa rel_add(unsigned base);
/// Two tracks (x, y): accepts iff y = c * x. Carries stay below c.
Dfa rel_scale(unsigned base, unsigned c);
/// One track: accepts exactly the encodings of `value`.
Dfa rel_const(unsigned base, const BigInt& value);

/// One track per machine, each reading its own index; accepts iff
/// `pred(outputs)` holds for the outputs reached. All machines share a base.
using OutputPredicate = std::function<bool(std::span<const Letter>)>;
Dfa rel_outputs(std::span<const Dfao* const> machines, const OutputPredicate& pred);

/// Two tracks (x, y): accepts iff a_x = a_y.
Dfa rel_seq_eq(const Dfao& m);
/// One track: accepts iff a_x = c.
Dfa rel_seq_letter(const Dfao& m, Letter c);

}  // namespace autseq
