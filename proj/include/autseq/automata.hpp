#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "autseq/dfa.hpp"
#include "autseq/dfao.hpp"
#include "autseq/nfa.hpp"
#include "autseq/witness.hpp"

namespace autseq {

/// State caps shared by every construction that can blow up.
struct Limits {
  std::size_t max_states = 10'000'000;
};

/// Reachable subset construction; the empty subset, when reached, is the sink.
Dfa determinize(const Nfa& n, const Limits& limits = {});
Dfa complement(const Dfa& d);

/// Reachable product. Throws InputError on alphabet mismatch.
Dfa intersect(const Dfa& a, const Dfa& b, const Limits& limits = {});
Dfa unite(const Dfa& a, const Dfa& b, const Limits& limits = {});

/// Erases one track: the result reads the remaining tracks and guesses the
/// erased digit. Words are not lengthened, so callers follow with pad_closure.
Nfa project(const Nfa& n, unsigned track);
Nfa project(const Dfa& d, unsigned track);
/// Erases several tracks at once (any order, no duplicates).
Nfa project(const Dfa& d, std::span<const unsigned> tracks);

/// Accepts w iff w followed by some number of all-zero symbols is accepted.
Nfa pad_closure(const Nfa& n);

/// Reindexes tracks: track t of `d` becomes track positions[t] of an
/// automaton of arity new_arity. Tracks not named are ignored.
Dfa cylindrify(const Dfa& d, unsigned new_arity, std::span<const unsigned> positions);

/// Canonical LSD-first encodings: empty, or last symbol not all-zero.
Dfa canonical_filter(unsigned base, unsigned arity);

Dfa minimize_dfa(const Dfa& d);
Dfao minimize_dfao(const Dfao& m);

/// Drops states unreachable from the initial state; numbering is BFS order.
Dfa reachable_part(const Dfa& d);

bool is_empty(const Dfa& d);
/// Shortest accepted word, ties broken by the smallest symbol sequence.
std::optional<std::vector<Symbol>> shortest_word(const Dfa& d);
std::optional<Witness> shortest_witness(const Dfa& d);
/// Infinite language test; callers intersect with canonical_filter first so
/// that the answer concerns integer tuples rather than padded words.
bool is_infinite(const Dfa& d);

/// Smallest integer accepted by a one-track padding-invariant DFA.
std::optional<BigInt> least_integer(const Dfa& d);
/// Largest integer accepted by a one-track DFA whose canonical language is
/// finite. Throws InputError when it is infinite.
std::optional<BigInt> greatest_integer(const Dfa& d);

/// True iff the two DFAs accept the same language.
bool equivalent(const Dfa& a, const Dfa& b);

}  // namespace autseq
