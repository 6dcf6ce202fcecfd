#include "doctest.h"

#include "autseq/arith.hpp"
#include "autseq/automata.hpp"
#include "autseq/errors.hpp"
#include "autseq/relation.hpp"
#include "autseq/sequence.hpp"
#include "../properties.hpp"
#include "../support.hpp"

using namespace autseq;

namespace {

const MultiTrackAlphabet kUnary(2, 1);

// Accepts exactly the given word over base 2, arity 1.
Nfa exact_word(const std::vector<Symbol>& w) {
  std::vector<Nfa::Edge> edges;
  for (State q = 0; q < w.size(); ++q) edges.push_back({q, w[q], q + 1});
  std::vector<std::uint8_t> finals(w.size() + 1, 0);
  finals.back() = 1;
  return Nfa(kUnary, static_cast<std::uint32_t>(w.size() + 1), std::move(edges), {0}, std::move(finals));
}

using W = std::vector<Symbol>;

}  // namespace

TEST_SUITE("core") {

TEST_CASE("determinize a singleton language") {
  const Dfa d = determinize(exact_word({1}));
  CHECK(d.num_states() == 3);
  CHECK(d.accepts(W{1}));
  CHECK_FALSE(d.accepts(W{}));
  CHECK_FALSE(d.accepts(W{0}));
  CHECK_FALSE(d.accepts(W{1, 0}));
}

TEST_CASE("no final states gives the empty language") {
  const Nfa n(kUnary, 2, {{0, 0, 1}, {1, 1, 0}}, {0}, {0, 0});
  const Dfa d = determinize(n);
  CHECK(is_empty(d));
  CHECK_FALSE(shortest_witness(d).has_value());
  const Dfa all = complement(d);
  for (const auto& w : testing::all_words(2, 6)) CHECK(all.accepts(w));
  CHECK(minimize_dfa(all).num_states() == 1);
}

TEST_CASE("determinization respects the state cap") {
  std::mt19937 rng(7);
  const Nfa n = testing::random_nfa(rng, 2, 2, 12, 0.4);
  CHECK_THROWS_AS(determinize(n, Limits{2}), ResourceLimitError);
}

TEST_CASE("intersect and unite with trivial languages") {
  std::mt19937 rng(11);
  const Dfa d = determinize(testing::random_nfa(rng, 2, 1, 4));
  const Dfa none = determinize(Nfa(kUnary, 1, {}, {0}, {0}));
  const Dfa all = complement(none);
  CHECK(equivalent(intersect(d, all), d));
  CHECK(is_empty(intersect(d, none)));
  CHECK(equivalent(unite(d, none), d));
  CHECK_THROWS_AS(intersect(d, rel_compare(2, CompareOp::LT)), InputError);
}

TEST_CASE("projection examples") {
  // Every pair has a sum.
  const Dfa sums = determinize(pad_closure(project(rel_add(2), 2)));
  CHECK(minimize_dfa(sums).num_states() == 1);
  CHECK_FALSE(is_empty(sums));
  const Dfa ys = determinize(pad_closure(project(rel_compare(2, CompareOp::EQ), 0)));
  for (const auto& w : testing::all_words(2, 6)) CHECK(ys.accepts(w));
  CHECK_THROWS(project(rel_add(2), 3));
}

TEST_CASE("pad closure strips trailing zero symbols") {
  const Nfa ten = pad_closure(exact_word({1, 0}));
  CHECK(ten.accepts(W{1}));
  CHECK(ten.accepts(W{1, 0}));
  CHECK_FALSE(ten.accepts(W{1, 0, 0}));
  const Nfa one = pad_closure(exact_word({1}));
  CHECK(one.accepts(W{1}));
  CHECK_FALSE(one.accepts(W{1, 0}));
  CHECK_FALSE(one.accepts(W{}));
}

TEST_CASE("canonical filter") {
  const Dfa f = canonical_filter(2, 1);
  CHECK_FALSE(f.accepts(W{1, 0}));
  CHECK(f.accepts(W{0, 1}));
  CHECK(f.accepts(W{}));
  // Intersecting keeps the tuples: x = 5 still has exactly one canonical word.
  const Dfa five = intersect(rel_const(2, 5), f);
  CHECK(five.accepts(W{1, 0, 1}));
  CHECK_FALSE(five.accepts(W{1, 0, 1, 0}));
  CHECK_FALSE(is_infinite(five));
  CHECK(is_infinite(rel_const(2, 5)));
}

TEST_CASE("minimization") {
  const Dfa all = complement(determinize(Nfa(kUnary, 1, {}, {0}, {0})));
  CHECK(minimize_dfa(all) == minimize_dfa(minimize_dfa(all)));
  CHECK(minimize_dfa(all).num_states() == 1);
  const Dfao tm = builtin_dfao("thue-morse");
  CHECK(minimize_dfao(tm) == tm);
  // Two interchangeable states collapse.
  const Dfao twin(2, {"0"}, {1, 1, 0, 0}, 0, {0, 0});
  CHECK(minimize_dfao(twin).num_states() == 1);
}

TEST_CASE("shortest witness of x = y is the empty word") {
  const auto w = shortest_witness(rel_compare(2, CompareOp::EQ));
  REQUIRE(w.has_value());
  CHECK(w->values == std::vector<BigInt>{0, 0});
}

TEST_CASE("infinite language tests") {
  const Dfao parity = residue_dfao(2, 2);
  const Dfa even = intersect(rel_seq_letter(parity, parity.letter("0")), canonical_filter(2, 1));
  CHECK(is_infinite(even));
  CHECK_FALSE(is_infinite(intersect(rel_const(2, 5), canonical_filter(2, 1))));
}

TEST_CASE("integer extremes") {
  const Dfa small = atom::compare_const(2, "x", CompareOp::LT, 9).dfa();
  CHECK(least_integer(small) == BigInt(0));
  CHECK(greatest_integer(small) == BigInt(8));
  CHECK_THROWS_AS(greatest_integer(atom::compare_const(2, "x", CompareOp::GE, 9).dfa()), InputError);
  CHECK_FALSE(least_integer(atom::compare_const(2, "x", CompareOp::LT, 0).dfa()).has_value());
}

TEST_CASE("random NFAs agree with enumeration") {
  CHECK(testing::core_discrepancies(20261014, 40) == 0);
}

}
