#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "autseq/automata.hpp"
#include "autseq/dfa.hpp"
#include "autseq/dfao.hpp"
#include "autseq/sequence.hpp"
#include "autseq/witness.hpp"

namespace autseq {

/// Position-dependent letter orders: at position p the letter c has rank
/// ranks[s][c], where s is the selector's output at p.
struct PermutationSequence {
  Dfao selector;
  std::vector<std::vector<unsigned>> ranks;
};

/// Throws InputError unless every rank table is a bijection on
/// 0..alphabet_size-1 and there is one table per selector letter.
void validate(const PermutationSequence& psi, std::size_t alphabet_size);

/// Natural order at even positions, reversed at odd ones; the order in which
/// continued fractions compare.
PermutationSequence cf_alternating(unsigned base, std::size_t alphabet_size);

enum class Extreme { Least, Greatest };
enum class Direction { Forward, Reverse };

struct OrderSpec {
  Extreme extreme = Extreme::Least;
  Direction direction = Direction::Forward;
  std::optional<PermutationSequence> psi;
  /// Restrict to windows occurring infinitely often. Reverse closures are
  /// always built this way.
  bool limit = false;
};

struct OrbitResult {
  Dfao dfao;
  /// Sizes per stage, keyed "M<n>.nfa_states" and so on.
  std::map<std::string, std::size_t> stats;
};

/// Dfao for the extreme sequence of the orbit closure of m under `order`.
OrbitResult orbit_extreme_dfao(const Dfao& m, const OrderSpec& order, const Limits& limits = {});

/// The matching brute-force order for scan_orbit_extreme.
FactorOrder factor_order(const OrderSpec& order, std::size_t alphabet_size);

enum class Ordering { LT, EQ, GT };
struct Comparison {
  Ordering result = Ordering::EQ;
  std::optional<BigInt> index;  // first difference
};

/// Compares the sequences of a and b under the (possibly twisted) order of
/// `order`; only its psi and extreme fields are used. b's tokens must all be
/// tokens of a.
Comparison compare_sequences(const Dfao& a, const Dfao& b, const OrderSpec& order = {});

/// Larger of the greatest shifts of b and of its complement. Binary b only.
Dfao theta(const Dfao& b, const Limits& limits = {});

/// n -> a_{n+s}.
Dfao shift_dfao(const Dfao& m, std::uint64_t s, const Limits& limits = {});
/// Swaps the letters 0 and 1 of a binary Dfao.
Dfao complement_binary(const Dfao& m);

/// Builds the Dfao whose value at n is the unique c with n accepted by
/// by_letter[c]. Throws InternalError when some reachable state accepts
/// zero or several letters.
Dfao dfao_from_letter_sets(unsigned base, std::vector<std::string> alphabet, const std::vector<Dfa>& by_letter,
                           const Limits& limits = {});

}  // namespace autseq
