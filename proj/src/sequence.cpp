#include "autseq/sequence.hpp"

#include <algorithm>
#include <set>

#include "autseq/automata.hpp"
#include "autseq/errors.hpp"

namespace autseq {

Letter eval(const Dfao& m, std::uint64_t n) {
  State q = m.initial();
  while (n > 0) {
    q = m.next(q, static_cast<Digit>(n % m.base()));
    n /= m.base();
  }
  return m.output(q);
}

Letter eval(const Dfao& m, const BigInt& n) {
  const auto digits = to_digits(n, m.base());
  return eval_digits(m, digits);
}

Letter eval_digits(const Dfao& m, std::span<const Digit> digits) {
  State q = m.initial();
  for (Digit d : digits) {
    if (d >= m.base()) throw InputError("digit out of range for base");
    q = m.next(q, d);
  }
  return m.output(q);
}

Word prefix(const Dfao& m, std::size_t n) {
  Word out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = eval(m, std::uint64_t{i});
  return out;
}

std::string morphism_fixed_point(const Morphism& h, char seed, std::size_t n) {
  auto image = [&](char c) -> const std::string& {
    auto it = h.images.find(c);
    if (it == h.images.end()) throw InputError(std::string("morphism has no image for letter '") + c + "'");
    if (it->second.empty()) throw InputError(std::string("morphism erases letter '") + c + "'");
    return it->second;
  };
  const std::string& first = image(seed);
  if (first.size() < 2 || first[0] != seed)
    throw InputError(std::string("morphism is not prolongable on '") + seed + "'");
  std::string w(1, seed);
  // Expanding position i of w appends h(w[i]); w stays a prefix of the fixed point.
  for (std::size_t i = 0; w.size() < n; ++i) {
    const std::string& img = image(w[i]);
    w += (i == 0) ? img.substr(1) : img;
  }
  w.resize(n);
  return w;
}

Dfao residue_dfao(unsigned base, unsigned modulus) {
  if (modulus < 1) throw InputError("modulus must be positive");
  // State (value mod m, base^e mod m).
  const unsigned m = modulus;
  std::vector<State> delta(std::size_t{m} * m * base);
  std::vector<Letter> out(std::size_t{m} * m);
  for (unsigned v = 0; v < m; ++v)
    for (unsigned p = 0; p < m; ++p) {
      const State q = v * m + p;
      out[q] = v;
      for (Digit d = 0; d < base; ++d) {
        const unsigned nv = (v + d * p) % m, np = (p * base) % m;
        delta[std::size_t{q} * base + d] = nv * m + np;
      }
    }
  std::vector<std::string> alphabet;
  for (unsigned v = 0; v < m; ++v) alphabet.push_back(std::to_string(v));
  return minimize_dfao(Dfao(base, alphabet, std::move(delta), 1 % m, std::move(out)));
}

Dfao builtin_dfao(const std::string& name) {
  const std::vector<std::string> binary = {"0", "1"};
  if (name == "thue-morse") return Dfao(2, binary, {0, 1, 1, 0}, 0, {0, 1});
  if (name == "rudin-shapiro") {
    // State 2*last + parity: last digit read and parity of adjacent 11 pairs.
    std::vector<State> delta(8);
    std::vector<Letter> out(4);
    for (unsigned last = 0; last < 2; ++last)
      for (unsigned par = 0; par < 2; ++par) {
        const State q = 2 * last + par;
        out[q] = par;
        for (Digit d = 0; d < 2; ++d) delta[q * 2 + d] = 2 * d + (par ^ (last & d));
      }
    return minimize_dfao(Dfao(2, binary, std::move(delta), 0, std::move(out)));
  }
  if (name == "period2") return residue_dfao(2, 2);
  if (name == "one-at-zero") return Dfao(2, binary, {0, 1, 1, 1}, 0, {1, 0});
  if (name == "constant-0") return Dfao(2, binary, {0, 0}, 0, {0});
  if (name == "constant-1") return Dfao(2, binary, {0, 0}, 0, {1});
  throw InputError("unknown builtin sequence '" + name + "'");
}

std::vector<std::string> builtin_dfao_names() {
  return {"thue-morse", "rudin-shapiro", "period2", "one-at-zero", "constant-0", "constant-1"};
}

SequenceOracle oracle_from_dfao(const Dfao& m) {
  return {m.alphabet(), [m](std::uint64_t n) { return eval(m, n); }, std::nullopt};
}

SequenceOracle oracle_from_letters(Word word, std::vector<std::string> alphabet) {
  const auto size = word.size();
  auto shared = std::make_shared<const Word>(std::move(word));
  return {std::move(alphabet),
          [shared](std::uint64_t n) {
            if (n >= shared->size()) throw InputError("oracle queried beyond its domain");
            return (*shared)[n];
          },
          size};
}

SequenceOracle oracle_from_word(const std::string& word, std::vector<std::string> alphabet) {
  if (alphabet.empty()) {
    std::set<char> letters(word.begin(), word.end());
    for (char c : letters) alphabet.emplace_back(1, c);
  }
  Word letters;
  letters.reserve(word.size());
  for (char c : word) {
    auto it = std::find(alphabet.begin(), alphabet.end(), std::string(1, c));
    if (it == alphabet.end()) throw InputError(std::string("letter '") + c + "' missing from alphabet");
    letters.push_back(static_cast<Letter>(it - alphabet.begin()));
  }
  return oracle_from_letters(std::move(letters), std::move(alphabet));
}

std::string squarefree_v(std::size_t n) {
  return morphism_fixed_point(Morphism{{{'2', "210"}, {'1', "20"}, {'0', "1"}}}, '2', n);
}

std::string ones_run_lengths(const std::string& binary) {
  std::string out;
  std::size_t run = 0;
  bool seen_zero = false;
  for (char c : binary) {
    if (c == '1') {
      ++run;
    } else {
      if (seen_zero) out += std::to_string(run);
      seen_zero = true;
      run = 0;
    }
  }
  return out;
}

SequenceOracle builtin_oracle(const std::string& name) {
  if (name == "squarefree-v") return oracle_from_word(squarefree_v(std::size_t{1} << 18), {"0", "1", "2"});
  return oracle_from_dfao(builtin_dfao(name));
}

namespace {

struct KernelAutomaton {
  std::vector<State> delta;
  std::vector<Letter> outputs;
};

// Kernel element (e, r) is the subsequence n -> a_{k^e n + r}. Elements with
// equal length-`depth` prefixes are merged.
KernelAutomaton build_kernel(const SequenceOracle& o, unsigned k, std::size_t depth, std::size_t max_states) {
  struct Elem {
    BigInt scale;  // k^e
    BigInt offset;
  };
  std::vector<Elem> elems{{1, 0}};
  std::map<Word, State> by_signature;
  auto signature = [&](const Elem& el) {
    Word sig(depth);
    for (std::size_t i = 0; i < depth; ++i) {
      const BigInt idx = el.offset + el.scale * i;
      if (o.domain && idx >= *o.domain) throw SynthesisError("oracle domain too small for kernel depth");
      if (idx > std::numeric_limits<std::uint64_t>::max()) throw SynthesisError("kernel index overflow");
      sig[i] = o.at(static_cast<std::uint64_t>(idx));
    }
    return sig;
  };
  by_signature.emplace(signature(elems[0]), 0);
  KernelAutomaton out;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (Digit d = 0; d < k; ++d) {
      Elem child{elems[i].scale * k, elems[i].offset + elems[i].scale * d};
      auto sig = signature(child);
      auto [it, inserted] = by_signature.try_emplace(std::move(sig), static_cast<State>(elems.size()));
      if (inserted) {
        elems.push_back(child);
        if (elems.size() > max_states)
          throw SynthesisError("kernel exceeded " + std::to_string(max_states) + " states");
      }
      out.delta.push_back(it->second);
    }
  }
  for (const auto& el : elems) out.outputs.push_back(o.at(static_cast<std::uint64_t>(el.offset)));
  return out;
}

}  // namespace

Dfao dfao_synthesize_from_oracle(const SequenceOracle& o, unsigned base, std::size_t max_states,
                                 std::uint64_t validate_len) {
  if (base < 2) throw InputError("base must be at least 2");
  if (o.domain) validate_len = std::min(validate_len, *o.domain);
  std::string last_failure = "no attempt";
  for (std::size_t depth = 4; depth <= (std::size_t{1} << 16); depth *= 2) {
    KernelAutomaton kernel;
    try {
      kernel = build_kernel(o, base, depth, max_states);
    } catch (const SynthesisError& e) {
      throw SynthesisError(std::string(e.what()) + " (" + last_failure + ")");
    }
    Dfao candidate(base, o.alphabet, std::move(kernel.delta), 0, std::move(kernel.outputs));
    std::optional<std::uint64_t> mismatch;
    for (std::uint64_t n = 0; n < validate_len; ++n)
      if (eval(candidate, n) != o.at(n)) {
        mismatch = n;
        break;
      }
    if (!mismatch) return minimize_dfao(candidate);
    last_failure = "validation mismatch at n=" + std::to_string(*mismatch) + " with prefix depth " +
                   std::to_string(depth);
  }
  throw SynthesisError(last_failure);
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> scan_repetitions(const Word& w, std::uint64_t p, std::uint64_t q,
                                                                      bool plus, std::uint64_t min_len) {
  if (q < 1 || p <= q) throw InputError("exponent must satisfy p > q >= 1");
  std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
  const std::uint64_t n = w.size();
  // For period T, window length J-count = #{J : qJ < (p-q)T} (or <=).
  for (std::uint64_t T = std::max<std::uint64_t>(1, min_len); T < n; ++T) {
    const std::uint64_t bound = (p - q) * T;
    const std::uint64_t span = plus ? bound / q + 1 : (bound + q - 1) / q;  // number of J values
    if (T + span > n) break;
    // run[i]: length of the run of w[j] == w[j+T] starting at i.
    std::uint64_t run = 0;
    std::vector<std::uint64_t> runs(n - T + 1, 0);
    for (std::uint64_t i = n - T; i-- > 0;) {
      run = (w[i] == w[i + T]) ? run + 1 : 0;
      runs[i] = run;
    }
    for (std::uint64_t I = 0; I + T + span <= n; ++I)
      if (runs[I] >= span) out.emplace_back(I, T);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> scan_palindromes(const Word& w, std::uint64_t min_len) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
  const std::uint64_t n = w.size();
  // Expand around every center: 2c covers odd lengths, 2c+1 even lengths.
  for (std::uint64_t c2 = 0; c2 + 1 < 2 * n; ++c2) {
    std::int64_t lo = static_cast<std::int64_t>(c2 / 2), hi = static_cast<std::int64_t>((c2 + 1) / 2);
    while (lo >= 0 && hi < static_cast<std::int64_t>(n) && w[lo] == w[hi]) {
      const std::uint64_t len = static_cast<std::uint64_t>(hi - lo + 1);
      if (len >= std::max<std::uint64_t>(min_len, 1)) out.emplace_back(lo, len);
      --lo;
      ++hi;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

Word extreme_factor(const Word& w, std::uint64_t L, std::uint64_t n, const FactorOrder& order) {
  const std::uint64_t lo = order.limit ? L / 2 : 0;
  auto letter_at = [&](std::uint64_t start, std::uint64_t offset) {
    return order.reverse ? w[start + n - 1 - offset] : w[start + offset];
  };
  auto rank = [&](std::uint64_t offset, Letter c) -> long {
    const long r = order.rank ? static_cast<long>(order.rank(offset, c)) : static_cast<long>(c);
    return order.greatest ? -r : r;
  };
  std::uint64_t best = lo;
  for (std::uint64_t s = lo + 1; s + n <= L; ++s) {
    for (std::uint64_t t = 0; t < n; ++t) {
      const long a = rank(t, letter_at(s, t)), b = rank(t, letter_at(best, t));
      if (a != b) {
        if (a < b) best = s;
        break;
      }
    }
  }
  Word out(n);
  for (std::uint64_t t = 0; t < n; ++t) out[t] = letter_at(best, t);
  return out;
}

}  // namespace

Word scan_orbit_extreme(const SequenceOracle& o, std::uint64_t L, std::uint64_t n, const FactorOrder& order) {
  if (n == 0) return {};
  if (4 * n > L) throw InputError("factor length must be at most a quarter of the prefix length");
  if (o.domain && 2 * L > *o.domain) throw InputError("oracle domain too small for the stability check");
  Word w(2 * L);
  for (std::uint64_t i = 0; i < 2 * L; ++i) w[i] = o.at(i);
  const Word first = extreme_factor(w, L, n, order);
  const Word second = extreme_factor(w, 2 * L, n, order);
  if (first != second)
    throw InstabilityError("extreme factor of length " + std::to_string(n) + " changed between prefixes " +
                           std::to_string(L) + " and " + std::to_string(2 * L));
  return first;
}

Word scan_orbit_least(const SequenceOracle& o, std::uint64_t L, std::uint64_t n) {
  return scan_orbit_extreme(o, L, n, {});
}

}  // namespace autseq
