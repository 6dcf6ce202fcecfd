#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "autseq/alphabet.hpp"

namespace autseq {

/// Complete deterministic automaton over a multi-track digit alphabet.
/// Immutable once constructed.
class Dfa {
 public:
  /// `delta` is row-major: delta[q * alphabet.size() + s].
  Dfa(MultiTrackAlphabet alphabet, std::uint32_t num_states, std::vector<State> delta,
      State initial, std::vector<std::uint8_t> finals);

  const MultiTrackAlphabet& alphabet() const noexcept { return alphabet_; }
  std::uint32_t num_states() const noexcept { return num_states_; }
  State initial() const noexcept { return initial_; }
  State next(State q, Symbol s) const noexcept { return delta_[std::size_t{q} * alphabet_.size() + s]; }
  bool is_final(State q) const noexcept { return finals_[q] != 0; }

  std::span<const State> transitions() const noexcept { return delta_; }
  std::span<const std::uint8_t> finals() const noexcept { return finals_; }

  State run(std::span<const Symbol> word) const noexcept;
  bool accepts(std::span<const Symbol> word) const noexcept { return is_final(run(word)); }

  bool operator==(const Dfa&) const = default;

 private:
  MultiTrackAlphabet alphabet_;
  std::uint32_t num_states_;
  std::vector<State> delta_;
  State initial_;
  std::vector<std::uint8_t> finals_;
};

}  // namespace autseq
