#include "autseq/arith.hpp"

#include <unordered_map>

#include "autseq/automata.hpp"
#include "autseq/errors.hpp"

namespace autseq {

Dfa rel_compare(unsigned base, CompareOp op) {
  const MultiTrackAlphabet a(base, 2);
  // States are flags, numbered LT=0, EQ=1, GT=2; initial EQ.
  std::vector<State> delta(3 * std::size_t{a.size()});
  for (State f = 0; f < 3; ++f)
    for (Symbol s = 0; s < a.size(); ++s)
      delta[f * a.size() + s] = static_cast<State>(flag_update(static_cast<Flag>(f), a.digit(s, 0), a.digit(s, 1)));
  auto accepting = [op](Flag f) {
    switch (op) {
      case CompareOp::LT: return f == Flag::LT;
      case CompareOp::LE: return f != Flag::GT;
      case CompareOp::EQ: return f == Flag::EQ;
      case CompareOp::NE: return f != Flag::EQ;
      case CompareOp::GE: return f != Flag::LT;
      case CompareOp::GT: return f == Flag::GT;
    }
    return false;
  };
  std::vector<std::uint8_t> finals(3);
  for (State f = 0; f < 3; ++f) finals[f] = accepting(static_cast<Flag>(f));
  return minimize_dfa(Dfa(a, 3, std::move(delta), static_cast<State>(Flag::EQ), std::move(finals)));
}

Dfa rel_add(unsigned base) {
  const MultiTrackAlphabet a(base, 3);
  // States: carry 0, carry 1, dead.
  constexpr State kDead = 2;
  std::vector<State> delta(3 * std::size_t{a.size()}, kDead);
  for (State c = 0; c < 2; ++c)
    for (Symbol s = 0; s < a.size(); ++s) {
      const unsigned sum = a.digit(s, 0) + a.digit(s, 1) + c;
      if (sum % base == a.digit(s, 2)) delta[c * a.size() + s] = sum / base;
    }
  return minimize_dfa(Dfa(a, 3, std::move(delta), 0, {1, 0, 0}));
}

Dfa rel_scale(unsigned base, unsigned c) {
  if (c == 0) throw InputError("scale factor must be positive");
  const MultiTrackAlphabet a(base, 2);
  // States: carry 0..c-1, then dead.
  const State dead = c;
  std::vector<State> delta(std::size_t{c + 1} * a.size(), dead);
  for (State carry = 0; carry < c; ++carry)
    for (Symbol s = 0; s < a.size(); ++s) {
      const std::uint64_t v = std::uint64_t{c} * a.digit(s, 0) + carry;
      if (v % base == a.digit(s, 1)) delta[carry * a.size() + s] = static_cast<State>(v / base);
    }
  std::vector<std::uint8_t> finals(c + 1, 0);
  finals[0] = 1;
  return minimize_dfa(Dfa(a, c + 1, std::move(delta), 0, std::move(finals)));
}

Dfa rel_const(unsigned base, const BigInt& value) {
  const auto digits = to_digits(value, base);
  const MultiTrackAlphabet a(base, 1);
  // States 0..len: digits matched so far; len+1 dead. After all digits only 0 loops.
  const auto len = static_cast<State>(digits.size());
  const State dead = len + 1;
  std::vector<State> delta(std::size_t{len + 2} * base, dead);
  for (State i = 0; i < len; ++i) delta[std::size_t{i} * base + digits[i]] = i + 1;
  delta[std::size_t{len} * base + 0] = len;
  std::vector<std::uint8_t> finals(len + 2, 0);
  finals[len] = 1;
  return minimize_dfa(Dfa(a, len + 2, std::move(delta), 0, std::move(finals)));
}

Dfa rel_outputs(std::span<const Dfao* const> machines, const OutputPredicate& pred) {
  if (machines.empty()) throw InputError("rel_outputs needs at least one machine");
  const unsigned k = machines[0]->base();
  for (const Dfao* m : machines)
    if (m->base() != k) throw InputError("rel_outputs machines have different bases");
  const auto arity = static_cast<unsigned>(machines.size());
  const MultiTrackAlphabet a(k, arity);
  std::vector<std::uint64_t> radix(arity);
  std::uint64_t r = 1;
  for (unsigned t = 0; t < arity; ++t) {
    radix[t] = r;
    r *= machines[t]->num_states();
  }
  std::unordered_map<std::uint64_t, State> ids;
  std::vector<std::vector<State>> tuples;
  auto intern = [&](const std::vector<State>& tup) {
    std::uint64_t key = 0;
    for (unsigned t = 0; t < arity; ++t) key += radix[t] * tup[t];
    auto [it, inserted] = ids.try_emplace(key, static_cast<State>(tuples.size()));
    if (inserted) tuples.push_back(tup);
    return it->second;
  };
  {
    std::vector<State> init(arity);
    for (unsigned t = 0; t < arity; ++t) init[t] = machines[t]->initial();
    intern(init);
  }
  std::vector<State> delta;
  std::vector<State> tup(arity);
  for (std::size_t i = 0; i < tuples.size(); ++i)
    for (Symbol s = 0; s < a.size(); ++s) {
      for (unsigned t = 0; t < arity; ++t) tup[t] = machines[t]->next(tuples[i][t], a.digit(s, t));
      delta.push_back(intern(tup));
    }
  std::vector<std::uint8_t> finals(tuples.size());
  std::vector<Letter> outs(arity);
  for (std::size_t i = 0; i < tuples.size(); ++i) {
    for (unsigned t = 0; t < arity; ++t) outs[t] = machines[t]->output(tuples[i][t]);
    finals[i] = pred(outs);
  }
  return minimize_dfa(Dfa(a, static_cast<std::uint32_t>(tuples.size()), std::move(delta), 0, std::move(finals)));
}

Dfa rel_seq_eq(const Dfao& m) {
  const Dfao* ms[] = {&m, &m};
  return rel_outputs(ms, [](std::span<const Letter> o) { return o[0] == o[1]; });
}

Dfa rel_seq_letter(const Dfao& m, Letter c) {
  if (c >= m.alphabet().size()) throw InputError("letter not in the output alphabet");
  const Dfao* ms[] = {&m};
  return rel_outputs(ms, [c](std::span<const Letter> o) { return o[0] == c; });
}

}  // namespace autseq
