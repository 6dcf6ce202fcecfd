#include "doctest.h"

#include <set>

#include "autseq/deciders.hpp"
#include "autseq/errors.hpp"
#include "autseq/io.hpp"
#include "autseq/orbit.hpp"
#include "autseq/sequence.hpp"
#include "../properties.hpp"

using namespace autseq;

namespace {

Dfao data_file(const std::string& name) { return load_dfao(std::string(AUTSEQ_DATA_DIR) + "/" + name); }

std::uint64_t w(const Verdict& v, std::size_t i) { return to_u64(v.witness.value().values.at(i)); }

bool power_window(const Word& a, std::uint64_t I, std::uint64_t T, const Exponent& e) {
  for (std::uint64_t J = 0; e.plus ? e.q * J <= (e.p - e.q) * T : e.q * J < (e.p - e.q) * T; ++J)
    if (a.at(I + J) != a.at(I + T + J)) return false;
  return T >= 1;
}

// Whether some factor x of a with min_len <= |x| <= max_len has x reversed
// among the factors too.
bool mirror_violated(const Word& a, std::size_t min_len, std::size_t max_len) {
  for (std::size_t len = min_len; len <= max_len; ++len) {
    std::set<Word> seen;
    for (std::size_t i = 0; i + len <= a.size() / 2; ++i) seen.emplace(a.begin() + i, a.begin() + i + len);
    for (const auto& x : seen)
      if (seen.count(Word(x.rbegin(), x.rend()))) return true;
  }
  return false;
}

}  // namespace

TEST_SUITE("deciders") {

TEST_CASE("exponent validation") {
  CHECK_THROWS_AS(validate(Exponent{2, 2, false}), InputError);
  CHECK_THROWS_AS(validate(Exponent{4, 2, false}), InputError);
  CHECK_THROWS_AS(validate(Exponent{1, 2, false}), InputError);
  CHECK_NOTHROW(validate(Exponent{5, 2, true}));
}

TEST_CASE("ultimate periodicity") {
  const Verdict p2 = decide_ultimate_periodicity(builtin_dfao("period2"));
  CHECK(p2.label == "ultimately-periodic");
  CHECK(w(p2, 0) == 2);
  CHECK(w(p2, 1) == 0);
  const Verdict one = decide_ultimate_periodicity(builtin_dfao("one-at-zero"));
  CHECK(one.decision);
  CHECK(w(one, 0) == 1);
  CHECK(w(one, 1) == 1);
  const Verdict tm = decide_ultimate_periodicity(builtin_dfao("thue-morse"));
  CHECK(tm.label == "aperiodic");
  CHECK_FALSE(tm.witness.has_value());
  CHECK_FALSE(decide_ultimate_periodicity(data_file("v.dfao")).decision);
  CHECK(periodicity_fused_nfa(builtin_dfao("thue-morse")).num_states() == 24);
}

TEST_CASE("Thue-Morse has no period below 64 past 256") {
  const Word t = prefix(builtin_dfao("thue-morse"), 4096);
  for (std::size_t P = 1; P <= 64; ++P)
    for (std::size_t N = 0; N <= 256; ++N) {
      bool periodic = true;
      for (std::size_t i = N; i + P < t.size() && periodic; ++i) periodic = t[i] == t[i + P];
      CHECK_FALSE(periodic);
    }
}

TEST_CASE("power avoidance") {
  const Dfao tm = builtin_dfao("thue-morse");
  const Verdict sq = decide_power(tm, {2, 1, false});
  CHECK(sq.label == "contains");
  CHECK(power_window(prefix(tm, 4096), w(sq, 0), w(sq, 1), {2, 1, false}));
  CHECK(decide_power(tm, {2, 1, true}).label == "avoids");
  CHECK(decide_power(data_file("v.dfao"), {2, 1, false}).label == "avoids");
}

TEST_CASE("power modes") {
  const Dfao tm = builtin_dfao("thue-morse");
  CHECK(decide_power(tm, {2, 1, false}, {PowerModeKind::InfOccurrences}).label == "infinitely-many");
  CHECK(decide_power(tm, {2, 1, false}, {PowerModeKind::InfDistinct}).label == "infinitely-many");
  const Verdict long_sq = decide_power(tm, {2, 1, false}, {PowerModeKind::MinLength, 5});
  CHECK(long_sq.decision);
  CHECK(w(long_sq, 1) >= 5);
  CHECK(power_window(prefix(tm, 1U << 14), w(long_sq, 0), w(long_sq, 1), {2, 1, false}));
  CHECK(decide_power(tm, {2, 1, true}, {PowerModeKind::EventuallyAvoids}).label == "eventually-avoids");
  CHECK(decide_power(tm, {2, 1, false}, {PowerModeKind::EventuallyAvoids}).label == "does-not-eventually-avoid");
  CHECK(decide_power(builtin_dfao("one-at-zero"), {3, 1, false}, {PowerModeKind::InfOccurrences}).decision);
  CHECK(decide_power(builtin_dfao("one-at-zero"), {2, 1, false}, {PowerModeKind::InfDistinct}).decision);
}

TEST_CASE("avoidance is monotone in the exponent") {
  const Exponent order[] = {{2, 1, false}, {5, 2, false}, {3, 1, false}};
  for (const auto& name : builtin_dfao_names()) {
    const Dfao m = builtin_dfao(name);
    bool avoided = false;
    for (const auto& e : order) {
      const bool avoids = !decide_power(m, e).decision;
      if (avoided) CHECK(avoids);
      avoided = avoided || avoids;
    }
  }
}

TEST_CASE("fused overlap decider") {
  const Dfao tm = builtin_dfao("thue-morse");
  const Verdict v = decide_overlap(tm);
  CHECK(v.label == "avoids");
  CHECK(v.stats.at("nfa_states") == 72);
  CHECK(v.stats.at("minimized_states") == 2);
  CHECK(v.stats.count("dfa_states") == 1);
  CHECK(overlap_fused_nfa(tm).num_states() == 72);

  const Verdict p2 = decide_overlap(builtin_dfao("period2"));
  CHECK(p2.label == "contains");
  CHECK(power_window(prefix(builtin_dfao("period2"), 64), w(p2, 0), w(p2, 1), {2, 1, true}));
  CHECK(decide_overlap(data_file("v.dfao")).label == "avoids");
}

TEST_CASE("palindromes") {
  const Dfao tm = builtin_dfao("thue-morse");
  const Verdict v = decide_palindromes(tm, 2);
  REQUIRE(v.decision);
  const Word t = prefix(tm, 4096);
  const auto I = w(v, 0), T = w(v, 1);
  CHECK(T >= 2);
  CHECK(std::equal(t.begin() + I, t.begin() + I + T, t.rbegin() + (t.size() - I - T)));
  CHECK(decide_palindromes(builtin_dfao("period2"), 3).label == "contains");
  CHECK(decide_palindromes(builtin_dfao("rudin-shapiro"), 1).label == "contains");
  CHECK_FALSE(decide_palindromes(builtin_dfao("period2"), 3, PalindromeMode::EventuallyAvoids).decision);
}

TEST_CASE("mirror property") {
  CHECK_FALSE(decide_mirror(builtin_dfao("constant-0"), 1).decision);
  const Dfao tm = builtin_dfao("thue-morse");
  const Verdict v = decide_mirror(tm, 1);
  CHECK_FALSE(v.decision);
  CHECK(mirror_violated(prefix(tm, 4096), 1, 1));
  const Dfao one = builtin_dfao("one-at-zero");
  CHECK(decide_mirror(one, 2).decision == !mirror_violated(prefix(one, 4096), 2, 12));
}

TEST_CASE("sigma squares") {
  CHECK_FALSE(decide_sigma_square(builtin_dfao("constant-0"), 2).decision);
  const Verdict p2 = decide_sigma_square(builtin_dfao("period2"), 2);
  CHECK(p2.decision);
  CHECK(w(p2, 0) == 0);
  CHECK(w(p2, 1) == 1);
  const Word t = prefix(builtin_dfao("thue-morse"), 4096);
  bool found = false;
  for (std::size_t I = 0; I < 2048 && !found; ++I)
    for (std::size_t T = 1; T <= 64 && !found; ++T) {
      bool ok = true;
      for (std::size_t J = 0; J < T && ok; ++J) ok = t[I + T + J] == (t[I + J] + 1) % 2;
      found = ok;
    }
  CHECK(decide_sigma_square(builtin_dfao("thue-morse"), 2).decision == found);
  CHECK_THROWS_AS(decide_sigma_square(data_file("v.dfao"), 2), InputError);
}

TEST_CASE("gamma membership") {
  const Dfao tm = builtin_dfao("thue-morse");
  CHECK(decide_gamma_membership(shift_dfao(tm, 1), false).label == "in-gamma");
  CHECK(decide_gamma_membership(complement_binary(builtin_dfao("period2")), false).label == "in-gamma");
  CHECK(decide_gamma_membership(builtin_dfao("constant-0"), false).label == "not-in-gamma");
  CHECK(decide_gamma_membership(tm, false).label == "not-in-gamma");
  CHECK_FALSE(decide_gamma_membership(builtin_dfao("constant-0"), true).decision);
  CHECK_THROWS_AS(decide_gamma_membership(data_file("v.dfao"), false), InputError);
}

TEST_CASE("deciders agree with scans on random automata") {
  CHECK(testing::decider_discrepancies(314159, 40) == 0);
}

}
