#pragma once

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "autseq/alphabet.hpp"

namespace autseq {

using BigInt = boost::multiprecision::cpp_int;

/// Integer tuple decoded from an accepted word, one value per track.
struct Witness {
  std::vector<BigInt> values;

  bool operator==(const Witness&) const = default;
};

/// LSD-first digits of a non-negative value; zero has no digits.
std::vector<Digit> to_digits(const BigInt& value, unsigned base);
BigInt from_digits(const std::vector<Digit>& digits, unsigned base);

/// Encodes a tuple as a word, padding every track to a common length of at
/// least `min_length`.
std::vector<Symbol> encode_tuple(const MultiTrackAlphabet& alphabet, const std::vector<BigInt>& values,
                                 std::size_t min_length = 0);
Witness decode_word(const MultiTrackAlphabet& alphabet, const std::vector<Symbol>& word);

/// Narrowing used when a witness indexes a generated prefix.
std::uint64_t to_u64(const BigInt& value);

std::string to_string(const Witness& w);

}  // namespace autseq
