#pragma once

#include <cstdint>
#include <span>
#include <tuple>
#include <vector>

#include "autseq/alphabet.hpp"

namespace autseq {

class Dfa;

/// Nondeterministic automaton over a multi-track digit alphabet, stored in
/// compressed rows: successors of (q, s) are a sorted, duplicate-free range.
class Nfa {
 public:
  struct Edge {
    State from;
    Symbol symbol;
    State to;
  };

  Nfa(MultiTrackAlphabet alphabet, std::uint32_t num_states, std::vector<Edge> edges,
      std::vector<State> initials, std::vector<std::uint8_t> finals);

  static Nfa from_dfa(const Dfa& d);

  const MultiTrackAlphabet& alphabet() const noexcept { return alphabet_; }
  std::uint32_t num_states() const noexcept { return num_states_; }
  std::span<const State> initials() const noexcept { return initials_; }
  bool is_final(State q) const noexcept { return finals_[q] != 0; }
  std::span<const std::uint8_t> finals() const noexcept { return finals_; }

  std::span<const State> successors(State q, Symbol s) const noexcept {
    const std::size_t row = std::size_t{q} * alphabet_.size() + s;
    return {targets_.data() + offsets_[row], targets_.data() + offsets_[row + 1]};
  }

  bool accepts(std::span<const Symbol> word) const;

  /// Same transitions, different final set.
  Nfa with_finals(std::vector<std::uint8_t> finals) const;

 private:
  Nfa() = default;

  MultiTrackAlphabet alphabet_{2, 1};
  std::uint32_t num_states_ = 0;
  std::vector<std::uint32_t> offsets_;
  std::vector<State> targets_;
  std::vector<State> initials_;
  std::vector<std::uint8_t> finals_;
};

}  // namespace autseq
