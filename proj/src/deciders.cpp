#include "autseq/deciders.hpp"

#include <algorithm>
#include <numeric>

#include "autseq/errors.hpp"
#include "autseq/sequence.hpp"

namespace autseq {
namespace {

using Op = CompareOp;

// Letters a_n for witness checks; small indices come from a cached prefix.
class Probe {
 public:
  explicit Probe(const Dfao& m) : m_(m) {}

  Letter at(const BigInt& n) {
    if (n < kCached) {
      const auto i = static_cast<std::size_t>(n);
      if (i >= cache_.size()) {
        const std::size_t grow = std::min<std::size_t>(kCached, std::max<std::size_t>(2 * (i + 1), 1024));
        for (std::size_t j = cache_.size(); j < grow; ++j) cache_.push_back(eval(m_, std::uint64_t{j}));
      }
      return cache_[i];
    }
    return eval(m_, n);
  }

 private:
  static constexpr std::size_t kCached = std::size_t{1} << 22;
  const Dfao& m_;
  Word cache_;
};

// Window loops beyond this many letters are refused rather than run.
constexpr std::uint64_t kMaxVerifyLength = std::uint64_t{1} << 26;

void require(bool ok, const std::string& what) {
  if (!ok) throw InternalError("witness failed verification: " + what);
}

void require_size(const BigInt& n) {
  if (n > kMaxVerifyLength) throw InternalError("witness too large to verify");
}

void record(Verdict& v, const std::string& prefix, const StageStats& s) {
  v.stats[prefix + "nfa_states"] = s.nfa_states;
  v.stats[prefix + "dfa_states"] = s.dfa_states;
  v.stats[prefix + "minimized_states"] = s.minimized_states;
}

Relation plus_one(unsigned base, const std::string& x, const std::string& y) {
  const std::string one = x + "#one";
  return exists({one}, conj(atom::add(base, x, one, y), atom::constant(base, one, 1)));
}

Relation timed_projection(const Relation& r, const std::string& var, const Limits& limits, StageStats* stats) {
  std::vector<std::string> others;
  for (const auto& v : r.vars())
    if (v != var) others.push_back(v);
  return exists(others, r, limits, stats);
}

bool infinite_one_track(const Relation& r) {
  return is_infinite(intersect(r.dfa(), canonical_filter(r.base(), 1)));
}

std::optional<Witness> witness_over(const Relation& r, const std::vector<std::string>& order) {
  return shortest_witness(r.over(order).dfa());
}

// Guard for the (I, T) window shape of an exponent.
bool in_window(const Exponent& e, const BigInt& J, const BigInt& T) {
  const BigInt lhs = BigInt(e.q) * J, rhs = BigInt(e.p - e.q) * T;
  return e.plus ? lhs <= rhs : lhs < rhs;
}

void verify_power(const Dfao& m, const Exponent& e, const Witness& w) {
  const BigInt& I = w.values.at(0);
  const BigInt& T = w.values.at(1);
  require(T >= 1, "period must be positive");
  require_size(I + 4 * T);
  Probe probe(m);
  for (BigInt J = 0; in_window(e, J, T); ++J) require(probe.at(I + J) == probe.at(I + T + J), "repetition window");
}

void verify_palindrome(const Dfao& m, std::uint64_t min_len, const Witness& w) {
  const BigInt& I = w.values.at(0);
  const BigInt& T = w.values.at(1);
  require(T >= min_len && T >= 1, "palindrome length");
  require_size(I + T);
  Probe probe(m);
  for (BigInt J = 0; 2 * J + 1 < T; ++J) require(probe.at(I + J) == probe.at(I + T - 1 - J), "palindrome window");
}

}  // namespace

void validate(const Exponent& e) {
  if (e.q < 1 || e.p <= e.q) throw InputError("exponent p/q must exceed 1");
  if (std::gcd(e.p, e.q) != 1) throw InputError("exponent p/q must be in lowest terms");
}

std::vector<unsigned> numeric_letters(const Dfao& m) {
  std::vector<unsigned> out;
  for (const auto& token : m.alphabet()) {
    if (token.empty() || token.size() > 9 || !std::all_of(token.begin(), token.end(), [](char c) {
          return c >= '0' && c <= '9';
        }))
      throw InputError("output token '" + token + "' is not a non-negative integer");
    out.push_back(static_cast<unsigned>(std::stoul(token)));
  }
  return out;
}

// Periodicity.

Nfa periodicity_fused_nfa(const Dfao& m) {
  const unsigned k = m.base();
  const std::uint32_t Q = m.num_states();
  const MultiTrackAlphabet alpha(k, 2);
  auto id = [&](unsigned b, unsigned c, State qi, State qs) {
    return static_cast<State>(((std::size_t{b} * 2 + c) * Q + qi) * Q + qs);
  };
  const std::uint32_t n = 3 * 2 * Q * Q;
  std::vector<Nfa::Edge> edges;
  std::vector<std::uint8_t> finals(n, 0);
  for (unsigned b = 0; b < 3; ++b)
    for (unsigned c = 0; c < 2; ++c)
      for (State qi = 0; qi < Q; ++qi)
        for (State qs = 0; qs < Q; ++qs) {
          const State from = id(b, c, qi, qs);
          const auto flag = static_cast<Flag>(b);
          // I >= N, no pending carry on I+P, and a_I != a_{I+P}.
          finals[from] = flag != Flag::LT && c == 0 && m.output(qi) != m.output(qs);
          for (Digit p = 0; p < k; ++p)
            for (Digit nd = 0; nd < k; ++nd) {
              const Digit pn[2] = {p, nd};
              const Symbol s = alpha.encode(pn);
              for (Digit i = 0; i < k; ++i) {
                const unsigned x = i + p + c;
                const auto nb = static_cast<unsigned>(flag_update(flag, i, nd));
                edges.push_back({from, s, id(nb, x / k, m.next(qi, i), m.next(qs, x % k))});
              }
            }
        }
  return Nfa(alpha, n, std::move(edges), {id(static_cast<unsigned>(Flag::EQ), 0, m.initial(), m.initial())},
             std::move(finals));
}

Verdict decide_ultimate_periodicity(const Dfao& m, const Limits& limits) {
  Verdict v;
  const Nfa fused = pad_closure(periodicity_fused_nfa(m));
  const Dfa bad = determinize(fused, limits);
  const Dfa good = minimize_dfa(complement(bad));
  v.stats["nfa_states"] = fused.num_states();
  v.stats["dfa_states"] = bad.num_states();
  v.stats["minimized_states"] = good.num_states();
  const Relation periods = conj(Relation({"P", "N"}, good), atom::compare_const(m.base(), "P", Op::GE, 1), limits);
  v.stats["relation_states"] = periods.dfa().num_states();
  v.witness = witness_over(periods, {"P", "N"});
  v.decision = v.witness.has_value();
  v.label = v.decision ? "ultimately-periodic" : "aperiodic";
  if (v.witness) {
    const BigInt& P = v.witness->values[0];
    const BigInt& N = v.witness->values[1];
    require_size(N + 5 * P + 64);
    Probe probe(m);
    for (BigInt i = N; i < N + 4 * P + 64; ++i) require(probe.at(i) == probe.at(i + P), "period");
  }
  return v;
}

// Powers.

Relation occurrence_relation(const Dfao& m, const Exponent& e, const Limits& limits, StageStats* stats) {
  validate(e);
  const unsigned k = m.base();
  const Relation window = conj({atom::scale(k, e.q, "J", "X"), atom::scale(k, e.p - e.q, "T", "Y"),
                                atom::compare(k, "X", e.plus ? Op::LE : Op::LT, "Y")},
                               limits);
  const Relation mismatch = conj({atom::add(k, "I", "J", "U"), atom::add(k, "U", "T", "V"), atom::seq_neq(m, "U", "V")},
                                 limits);
  const Relation bad = exists({"J", "X", "Y", "U", "V"}, conj(window, mismatch, limits), limits, stats);
  return negate(bad).over({"I", "T"});
}

namespace {

// Applies a power mode to a window relation over (I, T) with T = 0 included.
Verdict power_verdict(const Dfao& m, const Relation& occurrences, const PowerMode& mode, const Limits& limits,
                      const std::function<void(const Witness&)>& verify) {
  Verdict v;
  const unsigned k = m.base();
  std::uint64_t min_len = 1;
  if (mode.kind == PowerModeKind::MinLength) {
    if (mode.min_len < 1) throw InputError("minimum length must be at least 1");
    min_len = mode.min_len;
  }
  const Relation live = conj(occurrences, atom::compare_const(k, "T", Op::GE, min_len), limits);
  v.stats["relation_states"] = live.dfa().num_states();
  v.witness = witness_over(live, {"I", "T"});
  const bool any = v.witness.has_value();
  switch (mode.kind) {
    case PowerModeKind::Exists:
    case PowerModeKind::MinLength:
      v.decision = any;
      v.label = any ? "contains" : "avoids";
      break;
    case PowerModeKind::InfOccurrences:
    case PowerModeKind::InfDistinct: {
      StageStats s;
      const Relation proj =
          timed_projection(live, mode.kind == PowerModeKind::InfOccurrences ? "I" : "T", limits, &s);
      record(v, "projection_", s);
      v.decision = infinite_one_track(proj);
      v.label = v.decision ? "infinitely-many" : "finitely-many";
      break;
    }
    case PowerModeKind::EventuallyAvoids: {
      StageStats s;
      const Relation proj = timed_projection(live, "T", limits, &s);
      record(v, "projection_", s);
      v.decision = !infinite_one_track(proj);
      v.label = v.decision ? "eventually-avoids" : "does-not-eventually-avoid";
      if (v.decision) {
        if (auto longest = greatest_integer(proj.dfa()); longest && *longest <= std::numeric_limits<std::size_t>::max())
          v.stats["longest_length"] = static_cast<std::size_t>(*longest);
        v.witness.reset();
      }
      break;
    }
  }
  if (v.witness) verify(*v.witness);
  return v;
}

}  // namespace

Verdict decide_power(const Dfao& m, const Exponent& e, const PowerMode& mode, const Limits& limits) {
  StageStats s;
  const Relation occ = occurrence_relation(m, e, limits, &s);
  Verdict v = power_verdict(m, occ, mode, limits, [&](const Witness& w) { verify_power(m, e, w); });
  record(v, "", s);
  v.stats["exponent_num"] = e.p;
  v.stats["exponent_den"] = e.q;
  return v;
}

// Overlaps through the fused machine.

Nfa overlap_fused_nfa(const Dfao& m) {
  const unsigned k = m.base();
  const std::uint32_t Q = m.num_states();
  const MultiTrackAlphabet alpha(k, 2);
  // b compares J with T; c is the carry of I+J, d the carry of I+J+T.
  auto id = [&](unsigned b, unsigned c, unsigned d, State q, State r) {
    return static_cast<State>((((std::size_t{b} * 2 + c) * 3 + d) * Q + q) * Q + r);
  };
  const std::uint32_t n = 3 * 2 * 3 * Q * Q;
  std::vector<Nfa::Edge> edges;
  std::vector<std::uint8_t> finals(n, 0);
  for (unsigned b = 0; b < 3; ++b)
    for (unsigned c = 0; c < 2; ++c)
      for (unsigned d = 0; d < 3; ++d)
        for (State q = 0; q < Q; ++q)
          for (State r = 0; r < Q; ++r) {
            const State from = id(b, c, d, q, r);
            const auto flag = static_cast<Flag>(b);
            finals[from] = flag != Flag::GT && c == 0 && d == 0 && m.output(q) != m.output(r);
            for (Digit i = 0; i < k; ++i)
              for (Digit t = 0; t < k; ++t) {
                const Digit it[2] = {i, t};
                const Symbol s = alpha.encode(it);
                for (Digit j = 0; j < k; ++j) {
                  const unsigned x = c + i + j, y = d + i + j + t;
                  const auto nb = static_cast<unsigned>(flag_update(flag, j, t));
                  edges.push_back({from, s, id(nb, x / k, y / k, m.next(q, x % k), m.next(r, y % k))});
                }
              }
          }
  return Nfa(alpha, n, std::move(edges),
             {id(static_cast<unsigned>(Flag::EQ), 0, 0, m.initial(), m.initial())}, std::move(finals));
}

Relation overlap_fused_occurrences(const Dfao& m, const Limits& limits, StageStats* stats) {
  const Nfa fused = pad_closure(overlap_fused_nfa(m));
  const Dfa bad = determinize(fused, limits);
  Dfa occ = minimize_dfa(complement(bad));
  if (stats) *stats = {fused.num_states(), bad.num_states(), occ.num_states()};
  return Relation({"I", "T"}, std::move(occ));
}

Verdict decide_overlap(const Dfao& m, const Limits& limits) {
  StageStats s;
  const Relation occ = overlap_fused_occurrences(m, limits, &s);
  const Exponent e{2, 1, true};
  Verdict v = power_verdict(m, occ, {}, limits, [&](const Witness& w) { verify_power(m, e, w); });
  record(v, "", s);
  return v;
}

// Palindromes and mirrors.

namespace {

// Window at I against the reversed window at I2: pairs J + J' + 1 = T.
Relation reversal_mismatch(const Dfao& m, const std::string& I2, const Limits& limits) {
  const unsigned k = m.base();
  return conj({atom::add(k, "J", "J'", "S"), plus_one(k, "S", "T"), atom::add(k, "I", "J", "U"),
               atom::add(k, I2, "J'", "V"), atom::seq_neq(m, "U", "V")},
              limits);
}

}  // namespace

Relation palindrome_relation(const Dfao& m, std::uint64_t min_len, const Limits& limits, StageStats* stats) {
  if (min_len < 1) throw InputError("minimum palindrome length must be at least 1");
  const Relation bad = exists({"J", "J'", "S", "U", "V"}, reversal_mismatch(m, "I", limits), limits, stats);
  return conj(negate(bad), atom::compare_const(m.base(), "T", Op::GE, min_len), limits).over({"I", "T"});
}

Verdict decide_palindromes(const Dfao& m, std::uint64_t min_len, PalindromeMode mode, const Limits& limits) {
  StageStats s;
  const Relation pal = palindrome_relation(m, min_len, limits, &s);
  const PowerMode pm{mode == PalindromeMode::Exists ? PowerModeKind::Exists : PowerModeKind::EventuallyAvoids, 1};
  Verdict v = power_verdict(m, pal, pm, limits, [&](const Witness& w) { verify_palindrome(m, min_len, w); });
  record(v, "", s);
  return v;
}

Verdict decide_mirror(const Dfao& m, std::uint64_t min_len, const Limits& limits) {
  if (min_len < 1) throw InputError("minimum factor length must be at least 1");
  Verdict v;
  StageStats s;
  const Relation bad = exists({"J", "J'", "S", "U", "V"}, reversal_mismatch(m, "I'", limits), limits, &s);
  record(v, "", s);
  const Relation mirrored = conj(negate(bad), atom::compare_const(m.base(), "T", Op::GE, min_len), limits);
  StageStats p;
  const Relation violations = exists({"I'"}, mirrored, limits, &p);
  record(v, "projection_", p);
  v.stats["relation_states"] = violations.dfa().num_states();
  v.decision = violations.empty();
  v.label = v.decision ? "holds" : "fails";
  if (!v.decision) {
    v.witness = witness_over(mirrored, {"I", "I'", "T"});
    if (!v.witness) throw InternalError("violation set nonempty but no witness");
    const BigInt& I = v.witness->values[0];
    const BigInt& I2 = v.witness->values[1];
    const BigInt& T = v.witness->values[2];
    require(T >= min_len, "mirror length");
    require_size(std::max(I, I2) + T);
    Probe probe(m);
    for (BigInt J = 0; J < T; ++J) require(probe.at(I + J) == probe.at(I2 + T - 1 - J), "reversed window");
  }
  return v;
}

// x sigma(x).

Verdict decide_sigma_square(const Dfao& m, unsigned j, const Limits& limits) {
  if (j < 1) throw InputError("modulus must be positive");
  const auto values = numeric_letters(m);
  for (unsigned x : values)
    if (x >= j) throw InputError("output letter " + std::to_string(x) + " is outside 0.." + std::to_string(j - 1));
  const unsigned k = m.base();
  const Relation twisted = atom::outputs({&m, &m}, {"U", "V"}, [&](std::span<const Letter> out) {
    return values[out[1]] == (values[out[0]] + 1) % j;
  });
  StageStats s;
  const Relation bad = exists({"J", "U", "V"},
                              conj({atom::compare(k, "J", Op::LT, "T"), atom::add(k, "I", "J", "U"),
                                    atom::add(k, "U", "T", "V"), negate(twisted)},
                                   limits),
                              limits, &s);
  Verdict v = power_verdict(m, negate(bad).over({"I", "T"}), {}, limits, [&](const Witness& w) {
    const BigInt& I = w.values.at(0);
    const BigInt& T = w.values.at(1);
    require(T >= 1, "length");
    require_size(I + 2 * T);
    Probe probe(m);
    for (BigInt J = 0; J < T; ++J)
      require(values[probe.at(I + T + J)] == (values[probe.at(I + J)] + 1) % j, "successor window");
  });
  record(v, "", s);
  return v;
}

// Gamma.

Verdict decide_gamma_membership(const Dfao& m, bool strict, const Limits& limits) {
  const auto values = numeric_letters(m);
  for (unsigned x : values)
    if (x > 1) throw InputError("gamma membership needs a binary output alphabet");
  const unsigned k = m.base();
  auto letter_is = [&](const std::string& x, unsigned bit) {
    return atom::outputs({&m}, {x}, [&values, bit](std::span<const Letter> out) { return values[out[0]] == bit; });
  };
  Verdict v;
  // Agreement (or complementary agreement) of a_{K+t} and a_t for all t < i.
  auto matching = [&](bool same, bool bounded) {
    const Relation differ = same ? atom::seq_neq(m, "X", "t") : atom::seq_eq(m, "X", "t");
    Relation body = conj(atom::add(k, "K", "t", "X"), differ, limits);
    if (bounded) body = conj(body, atom::compare(k, "t", Op::LT, "i"), limits);
    StageStats s;
    Relation r = negate(exists({"t", "X"}, body, limits, &s));
    record(v, std::string(same ? "agree_" : "anti_") + (bounded ? "" : "all_"), s);
    return r;
  };
  const Relation at_ki = atom::add(k, "K", "i", "X");
  // Shift exceeds A: agree before i, then a_{K+i} = 1 > a_i = 0.
  const Relation above =
      exists({"X"}, conj({matching(true, true), at_ki, letter_is("X", 1), letter_is("i", 0)}, limits), limits);
  // Shift below the complement: complementary before i, then a_{K+i} = 0 < 1 - a_i.
  const Relation below =
      exists({"X"}, conj({matching(false, true), at_ki, letter_is("X", 0), letter_is("i", 0)}, limits), limits);
  Relation violations = disj(above, below, limits).over({"K", "i"});
  if (strict) violations = conj(violations, atom::compare_const(k, "K", Op::GE, 1), limits).over({"K", "i"});
  v.stats["relation_states"] = violations.dfa().num_states();
  v.witness = witness_over(violations, {"K", "i"});
  if (v.witness) {
    const BigInt& K = v.witness->values[0];
    const BigInt& i = v.witness->values[1];
    require_size(K + i + 1);
    Probe probe(m);
    bool same = true, anti = true;
    for (BigInt t = 0; t < i; ++t) {
      same = same && probe.at(K + t) == probe.at(t);
      anti = anti && probe.at(K + t) != probe.at(t);
    }
    const unsigned hi = values[probe.at(K + i)], lo = values[probe.at(i)];
    require((same && hi == 1 && lo == 0) || (anti && hi == 0 && lo == 0), "gamma comparison");
  } else if (strict) {
    const Relation equal = conj(disj(matching(true, false), matching(false, false), limits),
                                atom::compare_const(k, "K", Op::GE, 1), limits);
    v.witness = witness_over(equal, {"K"});
    if (v.witness) {
      const BigInt& K = v.witness->values[0];
      require_size(K + 4096);
      Probe probe(m);
      const bool same = probe.at(K) == probe.at(0);
      for (BigInt t = 0; t < 4096; ++t)
        require((probe.at(K + t) == probe.at(t)) == same, "shift equals the sequence or its complement");
    }
  }
  v.decision = !v.witness.has_value();
  v.label = std::string(v.decision ? "in-gamma" : "not-in-gamma") + (strict ? "-strict" : "");
  return v;
}

}  // namespace autseq
