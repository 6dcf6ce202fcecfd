#include "doctest.h"

#include <algorithm>
#include <random>

#include "autseq/automata.hpp"
#include "autseq/errors.hpp"
#include "autseq/sequence.hpp"

using namespace autseq;

namespace {

std::string word_of(const Dfao& m, std::size_t n) { return to_string(prefix(m, n), m.alphabet()); }

const Morphism kMu{{{'0', "01"}, {'1', "10"}}};
const Morphism kG{{{'2', "210"}, {'1', "20"}, {'0', "1"}}};

Word letters(const std::string& s) {
  Word w;
  for (char c : s) w.push_back(static_cast<Letter>(c - '0'));
  return w;
}

}  // namespace

TEST_SUITE("sequence") {

TEST_CASE("evaluation") {
  const Dfao tm = builtin_dfao("thue-morse");
  CHECK(eval(tm, 0) == 0);
  CHECK(eval(tm, 3) == 0);
  CHECK(eval(tm, 5) == 0);
  CHECK(eval(tm, BigInt(7)) == 1);
  for (const auto& name : builtin_dfao_names()) {
    const Dfao m = builtin_dfao(name);
    for (std::uint64_t n = 0; n < 64; ++n) {
      auto digits = to_digits(n, 2);
      digits.insert(digits.end(), 3, 0);
      CHECK(eval_digits(m, digits) == eval(m, n));
    }
  }
}

TEST_CASE("builtin prefixes") {
  CHECK(word_of(builtin_dfao("thue-morse"), 16) == "0110100110010110");
  CHECK(word_of(builtin_dfao("constant-0"), 4) == "0000");
  CHECK(word_of(builtin_dfao("rudin-shapiro"), 8) == "00010010");
  CHECK(word_of(builtin_dfao("period2"), 6) == "010101");
  CHECK(word_of(builtin_dfao("one-at-zero"), 5) == "10000");
  CHECK(builtin_dfao("thue-morse").num_states() == 2);
  CHECK_THROWS_AS(builtin_dfao("no-such"), InputError);
}

TEST_CASE("Rudin-Shapiro against its counting definition") {
  const Dfao rs = builtin_dfao("rudin-shapiro");
  for (std::uint64_t n = 0; n < 4096; ++n) {
    unsigned pairs = 0;
    for (std::uint64_t x = n; x; x >>= 1) pairs += (x & 3) == 3;
    CHECK(eval(rs, n) == pairs % 2);
  }
}

TEST_CASE("morphism fixed points") {
  CHECK(morphism_fixed_point(kG, '2', 12) == "210201210120");
  CHECK(morphism_fixed_point(kMu, '0', 16) == "0110100110010110");
  CHECK(morphism_fixed_point(Morphism{{{'a', "ab"}, {'b', "b"}}}, 'a', 5) == "abbbb");
  CHECK_THROWS_AS(morphism_fixed_point(kG, '0', 4), InputError);
  CHECK(word_of(builtin_dfao("thue-morse"), 1U << 14) == morphism_fixed_point(kMu, '0', 1U << 14));
}

TEST_CASE("v from the run lengths of Thue-Morse") {
  const std::string t = morphism_fixed_point(kMu, '0', 40000);
  const std::string runs = ones_run_lengths(t);
  REQUIRE(runs.size() >= 10000);
  CHECK(runs.substr(0, 10000) == morphism_fixed_point(kG, '2', 10000));
  CHECK(squarefree_v(12) == "210201210120");
}

TEST_CASE("synthesis") {
  const Dfao tm = builtin_dfao("thue-morse");
  const Dfao again = dfao_synthesize_from_oracle(oracle_from_dfao(tm), 2, 64, 1U << 12);
  CHECK(again.num_states() == 2);
  CHECK(prefix(again, 1U << 12) == prefix(tm, 1U << 12));

  const Dfao one = dfao_synthesize_from_oracle(oracle_from_word(std::string(4096, '7')), 2, 64, 4096);
  CHECK(one.num_states() == 1);

  const auto v = builtin_oracle("squarefree-v");
  const Dfao vm = dfao_synthesize_from_oracle(v, 2, 256, 1U << 16);
  CHECK(vm.num_states() == 5);
  CHECK(word_of(vm, 12) == "210201210120");
  bool agree = true;
  for (std::uint64_t n = 0; n < (1U << 16); ++n) agree = agree && vm.alphabet()[eval(vm, n)] == v.alphabet[v.at(n)];
  CHECK(agree);
  // Synthesized machines are already minimal and match the oracle.
  CHECK(minimize_dfao(vm) == vm);

  // A sequence that is not 2-automatic cannot be captured within the cap.
  std::string squares(1U << 14, '0');
  for (std::size_t i = 0; i * i < squares.size(); ++i) squares[i * i] = '1';
  CHECK_THROWS_AS(dfao_synthesize_from_oracle(oracle_from_word(squares), 2, 40, 1U << 14), SynthesisError);
}

TEST_CASE("repetition scans") {
  using P = std::pair<std::uint64_t, std::uint64_t>;
  const Word t16 = prefix(builtin_dfao("thue-morse"), 16);
  const auto squares = scan_repetitions(t16, 2, 1, false, 1);
  CHECK(std::find(squares.begin(), squares.end(), P{1, 1}) != squares.end());
  CHECK(scan_repetitions(letters(squarefree_v(3000)), 2, 1, false, 1).empty());
  const auto over = scan_repetitions(letters("01010"), 2, 1, true, 1);
  CHECK(std::find(over.begin(), over.end(), P{0, 2}) != over.end());

  // Against a naive triple loop on words up to length 512.
  std::mt19937 rng(5);
  std::bernoulli_distribution bit(0.5);
  for (int iter = 0; iter < 8; ++iter) {
    Word w(64 + 64 * iter);
    for (auto& c : w) c = bit(rng);
    if (iter % 2) w = prefix(builtin_dfao(iter % 4 == 1 ? "thue-morse" : "rudin-shapiro"), w.size());
    std::vector<P> naive;
    for (std::uint64_t I = 0; I < w.size(); ++I)
      for (std::uint64_t T = 1; I + 2 * T + 1 <= w.size(); ++T) {
        bool ok = true;
        for (std::uint64_t J = 0; J <= T && ok; ++J) ok = w[I + J] == w[I + T + J];
        if (ok) naive.emplace_back(I, T);
      }
    auto fast = scan_repetitions(w, 2, 1, true, 1);
    std::sort(naive.begin(), naive.end());
    std::sort(fast.begin(), fast.end());
    CHECK(fast == naive);
  }
}

TEST_CASE("palindrome scan") {
  using P = std::pair<std::uint64_t, std::uint64_t>;
  const auto pals = scan_palindromes(letters("0110"), 2);
  CHECK(std::find(pals.begin(), pals.end(), P{1, 2}) != pals.end());
  CHECK(std::find(pals.begin(), pals.end(), P{0, 4}) != pals.end());
  CHECK(pals.size() == 2);
}

TEST_CASE("orbit-least scans") {
  const auto tm = oracle_from_dfao(builtin_dfao("thue-morse"));
  CHECK(to_string(scan_orbit_least(tm, 1U << 15, 15), tm.alphabet) == "001011001101001");
  const auto rs = oracle_from_dfao(builtin_dfao("rudin-shapiro"));
  CHECK(to_string(scan_orbit_least(rs, 1U << 17, 16), rs.alphabet) == "0" + word_of(builtin_dfao("rudin-shapiro"), 15));
  CHECK_THROWS_AS(scan_orbit_least(tm, 64, 17), InputError);
}

}
