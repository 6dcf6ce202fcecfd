#include <algorithm>
#include <sstream>

#include "autseq/alphabet.hpp"
#include "autseq/dfa.hpp"
#include "autseq/dfao.hpp"
#include "autseq/errors.hpp"
#include "autseq/nfa.hpp"
#include "autseq/witness.hpp"

namespace autseq {

MultiTrackAlphabet::MultiTrackAlphabet(unsigned base, unsigned arity) : base_(base), arity_(arity) {
  if (base < 2) throw InputError("alphabet base must be at least 2");
  if (arity < 1) throw InputError("alphabet arity must be at least 1");
  std::uint64_t size = 1;
  for (unsigned t = 0; t < arity; ++t) {
    size *= base;
    if (size > kMaxSymbols)
      throw ResourceLimitError("alphabet of base " + std::to_string(base) + " and arity " +
                               std::to_string(arity) + " exceeds the symbol cap");
  }
  size_ = static_cast<Symbol>(size);
  place_.resize(arity);
  Symbol p = 1;
  for (unsigned t = arity; t-- > 0;) {
    place_[t] = p;
    p *= base;
  }
}

Symbol MultiTrackAlphabet::encode(std::span<const Digit> digits) const {
  if (digits.size() != arity_) throw InputError("symbol has wrong number of tracks");
  Symbol s = 0;
  for (unsigned t = 0; t < arity_; ++t) {
    if (digits[t] >= base_) throw InputError("digit out of range for base");
    s += digits[t] * place_[t];
  }
  return s;
}

std::vector<Digit> MultiTrackAlphabet::decode(Symbol s) const {
  std::vector<Digit> out(arity_);
  for (unsigned t = 0; t < arity_; ++t) out[t] = digit(s, t);
  return out;
}

Dfa::Dfa(MultiTrackAlphabet alphabet, std::uint32_t num_states, std::vector<State> delta, State initial,
         std::vector<std::uint8_t> finals)
    : alphabet_(alphabet),
      num_states_(num_states),
      delta_(std::move(delta)),
      initial_(initial),
      finals_(std::move(finals)) {
  if (num_states_ == 0) throw InputError("DFA needs at least one state");
  if (delta_.size() != std::size_t{num_states_} * alphabet_.size())
    throw InputError("DFA transition table is not total");
  if (finals_.size() != num_states_) throw InputError("DFA final set has wrong size");
  if (initial_ >= num_states_) throw InputError("DFA initial state out of range");
  for (State t : delta_)
    if (t >= num_states_) throw InputError("DFA transition target out of range");
}

State Dfa::run(std::span<const Symbol> word) const noexcept {
  State q = initial_;
  for (Symbol s : word) q = next(q, s);
  return q;
}

Nfa::Nfa(MultiTrackAlphabet alphabet, std::uint32_t num_states, std::vector<Edge> edges,
         std::vector<State> initials, std::vector<std::uint8_t> finals)
    : alphabet_(alphabet), num_states_(num_states), initials_(std::move(initials)), finals_(std::move(finals)) {
  if (finals_.size() != num_states_) throw InputError("NFA final set has wrong size");
  for (State q : initials_)
    if (q >= num_states_) throw InputError("NFA initial state out of range");
  std::sort(initials_.begin(), initials_.end());
  initials_.erase(std::unique(initials_.begin(), initials_.end()), initials_.end());
  const Symbol sigma = alphabet_.size();
  for (const Edge& e : edges)
    if (e.from >= num_states_ || e.to >= num_states_ || e.symbol >= sigma)
      throw InputError("NFA edge out of range");
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
    return std::tie(a.from, a.symbol, a.to) < std::tie(b.from, b.symbol, b.to);
  });
  edges.erase(std::unique(edges.begin(), edges.end(),
                          [](const Edge& a, const Edge& b) {
                            return a.from == b.from && a.symbol == b.symbol && a.to == b.to;
                          }),
              edges.end());
  const std::size_t rows = std::size_t{num_states_} * sigma;
  offsets_.assign(rows + 1, 0);
  for (const Edge& e : edges) ++offsets_[std::size_t{e.from} * sigma + e.symbol + 1];
  for (std::size_t r = 0; r < rows; ++r) offsets_[r + 1] += offsets_[r];
  targets_.reserve(edges.size());
  for (const Edge& e : edges) targets_.push_back(e.to);
}

Nfa Nfa::from_dfa(const Dfa& d) {
  Nfa n;
  n.alphabet_ = d.alphabet();
  n.num_states_ = d.num_states();
  const Symbol sigma = d.alphabet().size();
  const std::size_t rows = std::size_t{d.num_states()} * sigma;
  n.offsets_.resize(rows + 1);
  for (std::size_t r = 0; r <= rows; ++r) n.offsets_[r] = static_cast<std::uint32_t>(r);
  n.targets_.assign(d.transitions().begin(), d.transitions().end());
  n.initials_ = {d.initial()};
  n.finals_.assign(d.finals().begin(), d.finals().end());
  return n;
}

bool Nfa::accepts(std::span<const Symbol> word) const {
  std::vector<std::uint8_t> cur(num_states_, 0), nxt(num_states_, 0);
  for (State q : initials_) cur[q] = 1;
  for (Symbol s : word) {
    std::fill(nxt.begin(), nxt.end(), 0);
    for (State q = 0; q < num_states_; ++q)
      if (cur[q])
        for (State t : successors(q, s)) nxt[t] = 1;
    cur.swap(nxt);
  }
  for (State q = 0; q < num_states_; ++q)
    if (cur[q] && finals_[q]) return true;
  return false;
}

Nfa Nfa::with_finals(std::vector<std::uint8_t> finals) const {
  if (finals.size() != num_states_) throw InputError("NFA final set has wrong size");
  Nfa n = *this;
  n.finals_ = std::move(finals);
  return n;
}

Dfao::Dfao(unsigned base, std::vector<std::string> alphabet, std::vector<State> delta, State initial,
           std::vector<Letter> outputs)
    : base_(base),
      alphabet_(std::move(alphabet)),
      delta_(std::move(delta)),
      initial_(initial),
      outputs_(std::move(outputs)) {
  if (base_ < 2) throw InputError("DFAO base must be at least 2");
  if (alphabet_.empty()) throw InputError("DFAO output alphabet is empty");
  {
    auto sorted = alphabet_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw InputError("DFAO output alphabet has a repeated letter");
  }
  const std::size_t n = outputs_.size();
  if (n == 0) throw InputError("DFAO needs at least one state");
  if (delta_.size() != n * base_) throw InputError("DFAO transition table is not total");
  if (initial_ >= n) throw InputError("DFAO initial state out of range");
  for (State t : delta_)
    if (t >= n) throw InputError("DFAO transition target out of range");
  for (Letter c : outputs_)
    if (c >= alphabet_.size()) throw InputError("DFAO output letter out of range");
  // Zero-stability on reachable states.
  std::vector<std::uint8_t> seen(n, 0);
  std::vector<State> stack{initial_};
  seen[initial_] = 1;
  while (!stack.empty()) {
    State q = stack.back();
    stack.pop_back();
    if (outputs_[next(q, 0)] != outputs_[q])
      throw InputError("DFAO is not zero-stable: state " + std::to_string(q) + " outputs " +
                       alphabet_[outputs_[q]] + " but its 0-successor " + std::to_string(next(q, 0)) +
                       " outputs " + alphabet_[outputs_[next(q, 0)]]);
    for (Digit d = 0; d < base_; ++d) {
      State t = next(q, d);
      if (!seen[t]) {
        seen[t] = 1;
        stack.push_back(t);
      }
    }
  }
}

Letter Dfao::letter(std::string_view token) const {
  for (Letter c = 0; c < alphabet_.size(); ++c)
    if (alphabet_[c] == token) return c;
  throw InputError("letter '" + std::string(token) + "' is not in the output alphabet");
}

std::string to_string(std::span<const Letter> word, const std::vector<std::string>& alphabet) {
  const bool compact = std::all_of(alphabet.begin(), alphabet.end(), [](const std::string& s) { return s.size() == 1; });
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (!compact && i) out += ' ';
    out += alphabet.at(word[i]);
  }
  return out;
}

std::vector<Digit> to_digits(const BigInt& value, unsigned base) {
  if (value < 0) throw InputError("negative value has no digit encoding");
  std::vector<Digit> out;
  BigInt v = value;
  while (v > 0) {
    out.push_back(static_cast<Digit>(v % base));
    v /= base;
  }
  return out;
}

BigInt from_digits(const std::vector<Digit>& digits, unsigned base) {
  BigInt v = 0;
  for (std::size_t i = digits.size(); i-- > 0;) v = v * base + digits[i];
  return v;
}

std::vector<Symbol> encode_tuple(const MultiTrackAlphabet& alphabet, const std::vector<BigInt>& values,
                                 std::size_t min_length) {
  if (values.size() != alphabet.arity()) throw InputError("tuple arity does not match alphabet");
  std::vector<std::vector<Digit>> tracks;
  std::size_t len = min_length;
  for (const BigInt& v : values) {
    tracks.push_back(to_digits(v, alphabet.base()));
    len = std::max(len, tracks.back().size());
  }
  std::vector<Symbol> word(len);
  std::vector<Digit> sym(alphabet.arity());
  for (std::size_t i = 0; i < len; ++i) {
    for (unsigned t = 0; t < alphabet.arity(); ++t) sym[t] = i < tracks[t].size() ? tracks[t][i] : 0;
    word[i] = alphabet.encode(sym);
  }
  return word;
}

Witness decode_word(const MultiTrackAlphabet& alphabet, const std::vector<Symbol>& word) {
  Witness w;
  for (unsigned t = 0; t < alphabet.arity(); ++t) {
    std::vector<Digit> digits;
    digits.reserve(word.size());
    for (Symbol s : word) digits.push_back(alphabet.digit(s, t));
    w.values.push_back(from_digits(digits, alphabet.base()));
  }
  return w;
}

std::uint64_t to_u64(const BigInt& value) {
  if (value < 0 || value > std::numeric_limits<std::uint64_t>::max())
    throw InternalError("witness value " + value.str() + " does not fit in 64 bits");
  return static_cast<std::uint64_t>(value);
}

std::string to_string(const Witness& w) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < w.values.size(); ++i) os << (i ? "," : "") << w.values[i];
  os << ')';
  return os.str();
}

}  // namespace autseq
