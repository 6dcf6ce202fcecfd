#include "autseq/orbit.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "autseq/errors.hpp"
#include "autseq/relation.hpp"

namespace autseq {

void validate(const PermutationSequence& psi, std::size_t alphabet_size) {
  if (psi.ranks.size() != psi.selector.alphabet().size())
    throw InputError("need one rank table per selector letter");
  for (const auto& table : psi.ranks) {
    if (table.size() != alphabet_size) throw InputError("rank table size differs from the alphabet size");
    std::vector<unsigned> sorted = table;
    std::sort(sorted.begin(), sorted.end());
    for (unsigned r = 0; r < sorted.size(); ++r)
      if (sorted[r] != r) throw InputError("rank table is not a permutation");
  }
}

PermutationSequence cf_alternating(unsigned base, std::size_t alphabet_size) {
  std::vector<unsigned> identity(alphabet_size);
  std::iota(identity.begin(), identity.end(), 0U);
  std::vector<unsigned> reversed(identity.rbegin(), identity.rend());
  return {residue_dfao(base, 2), {identity, reversed}};
}

FactorOrder factor_order(const OrderSpec& order, std::size_t alphabet_size) {
  FactorOrder f;
  f.greatest = order.extreme == Extreme::Greatest;
  f.reverse = order.direction == Direction::Reverse;
  f.limit = order.limit || f.reverse;
  if (order.psi) {
    validate(*order.psi, alphabet_size);
    auto psi = std::make_shared<PermutationSequence>(*order.psi);
    f.rank = [psi](std::uint64_t offset, Letter c) { return psi->ranks[eval(psi->selector, offset)][c]; };
  }
  return f;
}

Dfao dfao_from_letter_sets(unsigned base, std::vector<std::string> alphabet, const std::vector<Dfa>& by_letter,
                           const Limits& limits) {
  if (by_letter.size() != alphabet.size()) throw InputError("one letter set per letter required");
  for (const auto& d : by_letter)
    if (d.alphabet().base() != base || d.alphabet().arity() != 1) throw InputError("letter sets must be one-track");
  // Product over the letter DFAs, explored from the initial tuple.
  std::map<std::vector<State>, State> ids;
  std::vector<std::vector<State>> tuples;
  std::vector<State> start;
  for (const auto& d : by_letter) start.push_back(d.initial());
  ids.emplace(start, 0);
  tuples.push_back(start);
  std::vector<State> delta;
  std::vector<Letter> outputs;
  for (std::size_t s = 0; s < tuples.size(); ++s) {
    const std::vector<State> cur = tuples[s];
    std::optional<Letter> out;
    for (Letter c = 0; c < by_letter.size(); ++c)
      if (by_letter[c].is_final(cur[c])) {
        if (out) throw InternalError("letters " + alphabet[*out] + " and " + alphabet[c] + " both selected");
        out = c;
      }
    if (!out) throw InternalError("no letter selected at a reachable state");
    outputs.push_back(*out);
    for (Digit d = 0; d < base; ++d) {
      std::vector<State> next(cur.size());
      for (std::size_t c = 0; c < cur.size(); ++c) next[c] = by_letter[c].next(cur[c], d);
      auto [it, inserted] = ids.try_emplace(next, static_cast<State>(tuples.size()));
      if (inserted) {
        tuples.push_back(next);
        if (tuples.size() > limits.max_states) throw ResourceLimitError("letter product exceeded the state cap");
      }
      delta.push_back(it->second);
    }
  }
  return minimize_dfao(Dfao(base, std::move(alphabet), std::move(delta), 0, std::move(outputs)));
}

namespace {

using Op = CompareOp;

class Builder {
 public:
  Builder(const Dfao& m, const OrderSpec& order, const Limits& limits)
      : m_(m), k_(m.base()), greatest_(order.extreme == Extreme::Greatest), limits_(limits) {
    if (order.psi) {
      validate(*order.psi, m.alphabet().size());
      if (order.psi->selector.base() != m.base()) throw InputError("order selector base differs from the sequence base");
      psi_ = *order.psi;
    }
  }

  OrbitResult forward(bool limit) {
    // Agree(l, j, p): the windows at l and j agree on offsets t < p.
    const Relation agree = negate(step("M1", {"t", "X", "Y"},
                                       all({atom::compare(k_, "t", Op::LT, "p"), atom::add(k_, "l", "t", "X"),
                                            atom::add(k_, "j", "t", "Y"), atom::seq_neq(m_, "X", "Y")})));
    // Offset p is the first difference and there the window at l is smaller.
    const Relation first_diff =
        conj(agree, step("M2", {"X", "Y"}, all({atom::add(k_, "l", "p", "X"), atom::add(k_, "j", "p", "Y"), less("X", "Y", "p")})),
             limits_);
    const Relation less_window = step("M3", {"p"}, conj(first_diff, atom::compare(k_, "p", Op::LE, "i"), limits_));
    std::vector<Dfa> by_letter;
    if (!limit) {
      const Relation minimal = negate(step("M4", {"l"}, less_window));
      for (Letter c = 0; c < m_.alphabet().size(); ++c) {
        Relation tail = all({minimal, atom::add(k_, "j", "i", "Y"), atom::seq_letter(m_, "Y", c)});
        by_letter.push_back(step("M6", {"j", "Y"}, tail).over({"i"}).dfa());
      }
    } else {
      const Relation smaller_from = step("M4", {"l"}, conj(less_window, atom::compare(k_, "l", Op::GE, "N"), limits_));
      for (Letter c = 0; c < m_.alphabet().size(); ++c) {
        Relation tail = all({negate(smaller_from), atom::compare(k_, "j", Op::GE, "N"), atom::add(k_, "j", "i", "Y"),
                             atom::seq_letter(m_, "Y", c)});
        by_letter.push_back(infinitely_often(step("M5", {"j", "Y"}, tail)));
      }
    }
    return finish(by_letter);
  }

  OrbitResult reverse() {
    // Windows are read downward from u+i to u; offset p sits at u+y with p+y = i.
    const Relation agree =
        negate(step("M1", {"z", "X", "Y"},
                    all({atom::compare(k_, "y", Op::LT, "z"), atom::compare(k_, "z", Op::LE, "i"),
                         atom::add(k_, "v", "z", "X"), atom::add(k_, "u", "z", "Y"), atom::seq_neq(m_, "X", "Y")})));
    Relation at_y = all({atom::add(k_, "v", "y", "X"), atom::add(k_, "u", "y", "Y")});
    Relation compared = psi_ ? all({at_y, atom::add(k_, "q", "y", "i"), less("X", "Y", "q")})
                             : all({at_y, atom::compare(k_, "y", Op::LE, "i"), less("X", "Y", "q")});
    std::vector<std::string> hidden = {"X", "Y"};
    if (psi_) hidden.push_back("q");
    const Relation first_diff = conj(agree, step("M2", hidden, compared), limits_);
    const Relation less_window = step("M3", {"y"}, first_diff);
    const Relation smaller_from = step("M4", {"v"}, conj(less_window, atom::compare(k_, "v", Op::GE, "N"), limits_));
    std::vector<Dfa> by_letter;
    for (Letter c = 0; c < m_.alphabet().size(); ++c) {
      Relation tail = all({negate(smaller_from), atom::compare(k_, "u", Op::GE, "N"), atom::seq_letter(m_, "u", c)});
      by_letter.push_back(infinitely_often(step("M5", {"u"}, tail)));
    }
    return finish(by_letter);
  }

 private:
  Relation all(std::initializer_list<Relation> parts) { return conj(parts, limits_); }

  Relation step(const std::string& stage, const std::vector<std::string>& vars, const Relation& r) {
    StageStats s;
    Relation out = exists(vars, r, limits_, &s);
    auto bump = [&](const std::string& key, std::size_t value) {
      auto& slot = stats_[stage + "." + key];
      slot = std::max(slot, value);
    };
    bump("nfa_states", s.nfa_states);
    bump("dfa_states", s.dfa_states);
    bump("minimized_states", s.minimized_states);
    return out;
  }

  unsigned rank(Letter selector, Letter c) const {
    const unsigned r = psi_ ? psi_->ranks[selector][c] : c;
    return greatest_ ? static_cast<unsigned>(m_.alphabet().size()) - 1 - r : r;
  }

  // a_X ranks below a_Y at compared offset p.
  Relation less(const std::string& X, const std::string& Y, const std::string& p) {
    if (!psi_) {
      return atom::outputs({&m_, &m_}, {X, Y}, [this](std::span<const Letter> o) { return rank(0, o[0]) < rank(0, o[1]); });
    }
    return atom::outputs({&m_, &m_, &psi_->selector}, {X, Y, p},
                         [this](std::span<const Letter> o) { return rank(o[2], o[0]) < rank(o[2], o[1]); });
  }

  // Keeps i when P(N, i) holds for arbitrarily large N.
  Dfa infinitely_often(const Relation& p) {
    const Relation later = conj(p, atom::compare(k_, "N", Op::GE, "M"), limits_);
    return negate(step("M6", {"M"}, negate(step("M6", {"N"}, later)))).over({"i"}).dfa();
  }

  OrbitResult finish(const std::vector<Dfa>& by_letter) {
    Dfao result = dfao_from_letter_sets(k_, m_.alphabet(), by_letter, limits_);
    stats_["M7.states"] = result.num_states();
    return {std::move(result), stats_};
  }

  const Dfao& m_;
  unsigned k_;
  bool greatest_;
  Limits limits_;
  std::optional<PermutationSequence> psi_;
  std::map<std::string, std::size_t> stats_;
};

}  // namespace

OrbitResult orbit_extreme_dfao(const Dfao& m, const OrderSpec& order, const Limits& limits) {
  Builder b(m, order, limits);
  return order.direction == Direction::Reverse ? b.reverse() : b.forward(order.limit);
}

Comparison compare_sequences(const Dfao& a, const Dfao& b, const OrderSpec& order) {
  if (a.base() != b.base()) throw InputError("sequences use different bases");
  std::vector<Letter> to_a;
  for (const auto& token : b.alphabet()) to_a.push_back(a.letter(token));
  const Relation differ = atom::outputs({&a, &b}, {"n", "n"}, [&](std::span<const Letter> o) { return o[0] != to_a[o[1]]; });
  const auto n = least_integer(differ.dfa());
  if (!n) return {Ordering::EQ, std::nullopt};
  const Letter x = eval(a, *n), y = to_a[eval(b, *n)];
  unsigned rx = x, ry = y;
  if (order.psi) {
    validate(*order.psi, a.alphabet().size());
    const Letter s = eval(order.psi->selector, *n);
    rx = order.psi->ranks[s][x];
    ry = order.psi->ranks[s][y];
  }
  const bool lt = order.extreme == Extreme::Greatest ? rx > ry : rx < ry;
  return {lt ? Ordering::LT : Ordering::GT, n};
}

namespace {

// Same sequence over the alphabet {0, 1} in that order.
Dfao as_binary(const Dfao& m, bool swap) {
  std::vector<Letter> outputs;
  for (State q = 0; q < m.num_states(); ++q) {
    const std::string& token = m.alphabet()[m.output(q)];
    if (token != "0" && token != "1") throw InputError("expected the binary alphabet 0, 1");
    outputs.push_back((token == "1") != swap ? 1 : 0);
  }
  return Dfao(m.base(), {"0", "1"}, std::vector<State>(m.transitions().begin(), m.transitions().end()), m.initial(),
              std::move(outputs));
}

}  // namespace

Dfao complement_binary(const Dfao& m) { return as_binary(m, true); }

Dfao theta(const Dfao& b, const Limits& limits) {
  const OrderSpec greatest{Extreme::Greatest, Direction::Forward, std::nullopt, false};
  Dfao g1 = orbit_extreme_dfao(as_binary(b, false), greatest, limits).dfao;
  Dfao g2 = orbit_extreme_dfao(as_binary(b, true), greatest, limits).dfao;
  return compare_sequences(g1, g2).result == Ordering::LT ? g2 : g1;
}

Dfao shift_dfao(const Dfao& m, std::uint64_t s, const Limits& limits) {
  const unsigned k = m.base();
  std::vector<Dfa> by_letter;
  for (Letter c = 0; c < m.alphabet().size(); ++c) {
    const Relation r = conj({atom::constant(k, "S", s), atom::add(k, "n", "S", "X"), atom::seq_letter(m, "X", c)}, limits);
    by_letter.push_back(exists({"S", "X"}, r, limits).over({"n"}).dfa());
  }
  return dfao_from_letter_sets(k, m.alphabet(), by_letter, limits);
}

}  // namespace autseq
