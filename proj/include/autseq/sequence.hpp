#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "autseq/dfao.hpp"
#include "autseq/witness.hpp"

namespace autseq {

Letter eval(const Dfao& m, std::uint64_t n);
Letter eval(const Dfao& m, const BigInt& n);
/// Reads explicit LSD-first digits, trailing zeros included.
Letter eval_digits(const Dfao& m, std::span<const Digit> digits);

/// a_0 ... a_{n-1}.
Word prefix(const Dfao& m, std::size_t n);

/// Non-erasing morphism on single-character letters.
struct Morphism {
  std::map<char, std::string> images;
};

/// First n letters of h^omega(seed). Throws InputError when h is not
/// prolongable on seed.
std::string morphism_fixed_point(const Morphism& h, char seed, std::size_t n);

/// n mod `modulus` read in any base; letters "0".."modulus-1".
Dfao residue_dfao(unsigned base, unsigned modulus);

/// thue-morse, rudin-shapiro, period2, one-at-zero, constant-0, constant-1.
Dfao builtin_dfao(const std::string& name);
std::vector<std::string> builtin_dfao_names();

/// A total index-to-letter function with a declared alphabet. `domain`, when
/// set, bounds the indices that may be queried.
struct SequenceOracle {
  std::vector<std::string> alphabet;
  std::function<Letter(std::uint64_t)> at;
  std::optional<std::uint64_t> domain;
};

SequenceOracle oracle_from_dfao(const Dfao& m);
/// Each character of `word` is a letter; the alphabet is its sorted letter set
/// unless given.
SequenceOracle oracle_from_word(const std::string& word, std::vector<std::string> alphabet = {});
SequenceOracle oracle_from_letters(Word word, std::vector<std::string> alphabet);

/// The squarefree word v = g^omega(2) with g: 2 -> 210, 1 -> 20, 0 -> 1.
std::string squarefree_v(std::size_t n);
/// Lengths of the blocks of 1s between consecutive 0s of a binary word.
std::string ones_run_lengths(const std::string& binary);

/// Named oracles accepted by `synth --builtin`: every builtin Dfao plus
/// squarefree-v.
SequenceOracle builtin_oracle(const std::string& name);

/// Builds a Dfao from the k-kernel of the oracle. Kernel elements are
/// identified by prefixes whose length doubles until the automaton agrees
/// with the oracle on every n < validate_len.
Dfao dfao_synthesize_from_oracle(const SequenceOracle& oracle, unsigned base, std::size_t max_states,
                                 std::uint64_t validate_len);

/// All (I, T) with T >= max(1, min_len) such that w[I+J] = w[I+T+J] for every
/// J with q*J < (p-q)*T (<= when plus), the window lying inside w.
std::vector<std::pair<std::uint64_t, std::uint64_t>> scan_repetitions(const Word& w, std::uint64_t p, std::uint64_t q,
                                                                      bool plus, std::uint64_t min_len);
/// All (I, T) with T >= min_len such that w[I..I+T) is a palindrome.
std::vector<std::pair<std::uint64_t, std::uint64_t>> scan_palindromes(const Word& w, std::uint64_t min_len);

/// Order used by factor scans. rank(p, letter) gives the letter's rank at
/// offset p of the compared words; natural order when unset.
struct FactorOrder {
  bool greatest = false;
  bool reverse = false;  // windows read right to left
  bool limit = false;    // only windows from the second half of the prefix
  std::function<unsigned(std::uint64_t, Letter)> rank;
};

/// Extreme length-n factor of the oracle's length-L prefix under `order`,
/// certified by recomputing with 2L. Throws InputError when n > L/4 and
/// InstabilityError when the doubled prefix changes the answer.
Word scan_orbit_extreme(const SequenceOracle& o, std::uint64_t L, std::uint64_t n, const FactorOrder& order = {});
Word scan_orbit_least(const SequenceOracle& o, std::uint64_t L, std::uint64_t n);

}  // namespace autseq
