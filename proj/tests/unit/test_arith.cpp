#include "doctest.h"

#include "autseq/arith.hpp"
#include "autseq/relation.hpp"
#include "autseq/sequence.hpp"
#include "../properties.hpp"

using namespace autseq;

namespace {

bool holds(const Dfa& r, std::vector<BigInt> xs, std::size_t pad = 0) {
  return r.accepts(encode_tuple(r.alphabet(), xs, pad));
}

}  // namespace

TEST_SUITE("arith") {

TEST_CASE("flag update follows the displayed cases") {
  CHECK(flag_update(Flag::EQ, 1, 2) == Flag::LT);
  CHECK(flag_update(Flag::LT, 3, 3) == Flag::LT);
  CHECK(flag_update(Flag::GT, 2, 2) == Flag::GT);
  CHECK(flag_update(Flag::LT, 2, 1) == Flag::GT);
  CHECK(flag_update(Flag::GT, 1, 2) == Flag::LT);
}

TEST_CASE("comparison") {
  CHECK(holds(rel_compare(2, CompareOp::LT), {3, 5}));
  CHECK(holds(rel_compare(2, CompareOp::EQ), {4, 4}));
  CHECK_FALSE(holds(rel_compare(2, CompareOp::LT), {0, 0}));
  CHECK(holds(rel_compare(3, CompareOp::GE), {7, 7}, 5));
}

TEST_CASE("addition") {
  const Dfa add = rel_add(2);
  CHECK(holds(add, {3, 5, 8}));
  CHECK_FALSE(holds(add, {1, 1, 3}));
  for (unsigned n = 0; n < 8; ++n) CHECK(holds(add, {0, n, n}));
}

TEST_CASE("scaling") {
  CHECK(holds(rel_scale(2, 3), {2, 6}));
  CHECK_FALSE(holds(rel_scale(2, 3), {2, 7}));
  for (unsigned x = 0; x < 64; ++x)
    for (unsigned y = 0; y < 64; ++y) CHECK(holds(rel_scale(2, 2), {x, y}) == (y == 2 * x));
}

TEST_CASE("sequence atoms on Thue-Morse") {
  const Dfao tm = builtin_dfao("thue-morse");
  const Dfa eq = rel_seq_eq(tm);
  CHECK(holds(eq, {1, 2}));
  CHECK_FALSE(holds(eq, {0, 1}));
  const Dfa zero = rel_seq_letter(tm, tm.letter("0"));
  std::vector<unsigned> hits;
  for (unsigned x = 0; x < 8; ++x)
    if (holds(zero, {x}, 4)) hits.push_back(x);
  CHECK(hits == std::vector<unsigned>{0, 3, 5, 6});
}

TEST_CASE("relation quantifiers") {
  // exists y: x + y = z and y = 5, i.e. z = x + 5.
  const Relation r = exists({"y"}, conj(atom::add(2, "x", "y", "z"), atom::constant(2, "y", 5)));
  CHECK(r.vars() == std::vector<std::string>{"x", "z"});
  for (unsigned x = 0; x < 20; ++x)
    for (unsigned z = 0; z < 30; ++z) CHECK(holds(r.dfa(), {x, z}) == (z == x + 5));
  // forall y: x <= y is x = 0.
  const Relation least = forall({"y"}, atom::compare(2, "x", CompareOp::LE, "y"));
  CHECK(least_integer(least.dfa()) == BigInt(0));
  CHECK(greatest_integer(least.dfa()) == BigInt(0));
  // Reordering tracks.
  const Relation swapped = atom::compare(2, "x", CompareOp::LT, "y").over({"y", "x"});
  CHECK(holds(swapped.dfa(), {5, 3}));
  CHECK_FALSE(holds(swapped.dfa(), {3, 5}));
}

TEST_CASE("relations agree with arithmetic below 64") {
  CHECK(testing::arith_discrepancies() == 0);
}

}
