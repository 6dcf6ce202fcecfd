#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "autseq/alphabet.hpp"

namespace autseq {

/// Index into a Dfao's output alphabet. The declared alphabet order is the
/// letter order used by every lexicographic comparison.
using Letter = std::uint32_t;
using Word = std::vector<Letter>;

/// Deterministic automaton with output reading base-k digits least
/// significant first. a_n is the output of the state reached on any
/// base-k representation of n, so trailing zero digits must not change the
/// output (zero-stability); the constructor rejects automata violating it.
class Dfao {
 public:
  Dfao(unsigned base, std::vector<std::string> alphabet, std::vector<State> delta, State initial,
       std::vector<Letter> outputs);

  unsigned base() const noexcept { return base_; }
  std::uint32_t num_states() const noexcept { return static_cast<std::uint32_t>(outputs_.size()); }
  State initial() const noexcept { return initial_; }
  State next(State q, Digit d) const noexcept { return delta_[std::size_t{q} * base_ + d]; }
  Letter output(State q) const noexcept { return outputs_[q]; }

  const std::vector<std::string>& alphabet() const noexcept { return alphabet_; }
  std::span<const State> transitions() const noexcept { return delta_; }
  std::span<const Letter> outputs() const noexcept { return outputs_; }

  /// Throws InputError for an unknown token.
  Letter letter(std::string_view token) const;

  bool operator==(const Dfao&) const = default;

 private:
  unsigned base_;
  std::vector<std::string> alphabet_;
  std::vector<State> delta_;
  State initial_;
  std::vector<Letter> outputs_;
};

/// Renders a word with the machine's tokens: concatenated when every token is
/// a single character, space-separated otherwise.
std::string to_string(std::span<const Letter> word, const std::vector<std::string>& alphabet);

}  // namespace autseq
