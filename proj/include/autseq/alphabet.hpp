#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace autseq {

using Digit = std::uint32_t;
using Symbol = std::uint32_t;
using State = std::uint32_t;

/// Symbols are m-tuples of base-k digits. Symbol indices follow tuple order:
/// track 0 is the most significant position, so comparing indices compares
/// tuples lexicographically. The all-zero tuple is always index 0.
class MultiTrackAlphabet {
 public:
  static constexpr Symbol kMaxSymbols = Symbol{1} << 20;

  MultiTrackAlphabet(unsigned base, unsigned arity);

  unsigned base() const noexcept { return base_; }
  unsigned arity() const noexcept { return arity_; }
  Symbol size() const noexcept { return size_; }
  static constexpr Symbol zero() noexcept { return 0; }

  Digit digit(Symbol s, unsigned track) const noexcept {
    return (s / place_[track]) % base_;
  }
  Symbol encode(std::span<const Digit> digits) const;
  std::vector<Digit> decode(Symbol s) const;

  bool operator==(const MultiTrackAlphabet& o) const noexcept {
    return base_ == o.base_ && arity_ == o.arity_;
  }

 private:
  unsigned base_;
  unsigned arity_;
  Symbol size_;
  std::vector<Symbol> place_;
};

}  // namespace autseq
