#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "autseq/automata.hpp"
#include "autseq/dfao.hpp"
#include "autseq/nfa.hpp"
#include "autseq/relation.hpp"
#include "autseq/witness.hpp"

namespace autseq {

/// `decision` is true for the first label of each pair: ultimately-periodic,
/// contains, infinitely-many, eventually-avoids, holds, in-gamma.
struct Verdict {
  bool decision = false;
  std::string label;
  std::optional<Witness> witness;
  std::map<std::string, std::size_t> stats;
};

/// p/q with gcd(p, q) = 1 and p > q >= 1; `plus` selects (p/q)+ powers.
struct Exponent {
  unsigned p = 2;
  unsigned q = 1;
  bool plus = false;
};
/// Throws InputError unless the exponent is reduced and greater than 1.
void validate(const Exponent& e);

enum class PowerModeKind { Exists, InfOccurrences, InfDistinct, MinLength, EventuallyAvoids };
struct PowerMode {
  PowerModeKind kind = PowerModeKind::Exists;
  std::uint64_t min_len = 1;  // MinLength only
};

enum class PalindromeMode { Exists, EventuallyAvoids };

/// (P, N) such that a_I = a_{I+P} for all I >= N, with P >= 1.
Verdict decide_ultimate_periodicity(const Dfao& m, const Limits& limits = {});

/// The fused sixtuple machine reading (P, N) and guessing I: accepts when some
/// I >= N has a_I != a_{I+P}. Every tuple of the state space is a state.
Nfa periodicity_fused_nfa(const Dfao& m);

/// Windows (I, T) of the exponent's shape, T = 0 included. Tracks I, T.
Relation occurrence_relation(const Dfao& m, const Exponent& e, const Limits& limits = {},
                             StageStats* stats = nullptr);
Verdict decide_power(const Dfao& m, const Exponent& e, const PowerMode& mode = {}, const Limits& limits = {});

/// Fused machine over [b, c, d, q, r] reading (I, T) and guessing J <= T:
/// accepts when a_{I+J} != a_{I+T+J}.
Nfa overlap_fused_nfa(const Dfao& m);
/// Complement of the determinized fused machine, minimized. Tracks I, T.
Relation overlap_fused_occurrences(const Dfao& m, const Limits& limits = {}, StageStats* stats = nullptr);
/// Same decision as decide_power with (2, 1, plus); built from the fused
/// machine, whose sizes are reported in the stats.
Verdict decide_overlap(const Dfao& m, const Limits& limits = {});

/// Palindromic windows (I, T) with T >= min_len.
Relation palindrome_relation(const Dfao& m, std::uint64_t min_len, const Limits& limits = {},
                             StageStats* stats = nullptr);
Verdict decide_palindromes(const Dfao& m, std::uint64_t min_len, PalindromeMode mode = PalindromeMode::Exists,
                           const Limits& limits = {});

/// Holds iff no factor x with |x| >= min_len has its reversal as a factor.
/// The witness of a failure is (I, I', T): the reversal of the window at I
/// sits at I'.
Verdict decide_mirror(const Dfao& m, std::uint64_t min_len, const Limits& limits = {});

/// Factors x sigma(x) with sigma(a) = (a+1) mod j. Output tokens must be the
/// numerals 0..j-1.
Verdict decide_sigma_square(const Dfao& m, unsigned j, const Limits& limits = {});

/// Binary sequences A with complement(A) <= shift^k A <= A for all k >= 0, or
/// strict inequalities for all k >= 1. A failure's witness is (k, i) with i
/// the first index where the violated comparison differs; an equality
/// failure of the strict test has witness (k).
Verdict decide_gamma_membership(const Dfao& m, bool strict, const Limits& limits = {});

/// Numeric value of every output token; throws InputError when a token is
/// not a non-negative integer.
std::vector<unsigned> numeric_letters(const Dfao& m);

}  // namespace autseq
