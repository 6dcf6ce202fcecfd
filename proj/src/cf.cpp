#include "autseq/cf.hpp"

#include <algorithm>
#include <numeric>

#include "autseq/deciders.hpp"
#include "autseq/errors.hpp"
#include "autseq/orbit.hpp"
#include "autseq/sequence.hpp"

namespace autseq {
namespace {

// Renumbers letters into numeric order.
Dfao numeric_order(const Dfao& m) {
  const auto values = numeric_letters(m);
  std::vector<Letter> order(values.size());
  std::iota(order.begin(), order.end(), 0U);
  std::sort(order.begin(), order.end(), [&](Letter a, Letter b) { return values[a] < values[b]; });
  for (std::size_t i = 1; i < order.size(); ++i)
    if (values[order[i]] == values[order[i - 1]]) throw InputError("two tokens name the same quotient");
  std::vector<Letter> rank(values.size());
  std::vector<std::string> alphabet;
  for (std::size_t i = 0; i < order.size(); ++i) {
    rank[order[i]] = static_cast<Letter>(i);
    alphabet.push_back(std::to_string(values[order[i]]));
  }
  std::vector<Letter> outputs;
  for (State q = 0; q < m.num_states(); ++q) outputs.push_back(rank[m.output(q)]);
  return Dfao(m.base(), std::move(alphabet), std::vector<State>(m.transitions().begin(), m.transitions().end()),
              m.initial(), std::move(outputs));
}

}  // namespace

AutomaticCF::AutomaticCF(const Dfao& quotients) : dfao_(numeric_order(quotients)) {
  for (const auto& token : dfao_.alphabet()) values_.push_back(static_cast<unsigned>(std::stoul(token)));
  // States read after some nonzero digit are exactly those of indices n >= 1.
  const unsigned k = dfao_.base();
  std::vector<std::uint8_t> seen(dfao_.num_states() * 2, 0);
  std::vector<std::pair<State, bool>> stack{{dfao_.initial(), false}};
  seen[dfao_.initial() * 2] = 1;
  while (!stack.empty()) {
    auto [q, positive] = stack.back();
    stack.pop_back();
    if (positive && values_[dfao_.output(q)] == 0)
      throw InputError("partial quotient 0 is reachable at a positive index");
    for (Digit d = 0; d < k; ++d) {
      const State r = dfao_.next(q, d);
      const bool pr = positive || d != 0;
      if (!seen[r * 2 + pr]) {
        seen[r * 2 + pr] = 1;
        stack.emplace_back(r, pr);
      }
    }
  }
}

std::vector<unsigned> AutomaticCF::quotients(std::size_t n) const {
  std::vector<unsigned> out;
  for (Letter c : prefix(dfao_, n)) out.push_back(values_[c]);
  return out;
}

std::vector<BigInt> cf_expand(const BigRatio& x) {
  BigInt p = numerator(x), q = denominator(x);
  std::vector<BigInt> out;
  while (q != 0) {
    BigInt a = p / q;
    if (p < 0 && a * q != p) --a;  // floor for negative values
    out.push_back(a);
    p -= a * q;
    std::swap(p, q);
  }
  return out;
}

BigRatio cf_value(const std::vector<BigInt>& quotients) {
  if (quotients.empty()) throw InputError("empty quotient list");
  const auto c = convergents(quotients).back();
  return BigRatio(c.p, c.q);
}

std::vector<Convergent> convergents(const std::vector<BigInt>& quotients) {
  std::vector<Convergent> out;
  BigInt p2 = 0, p1 = 1, q2 = 1, q1 = 0;
  for (std::size_t n = 0; n < quotients.size(); ++n) {
    const BigInt& a = quotients[n];
    if (n >= 1 && a < 1) throw InputError("partial quotient a_" + std::to_string(n) + " must be positive");
    BigInt p = a * p1 + p2, q = a * q1 + q2;
    out.push_back({p, q});
    p2 = p1;
    p1 = p;
    q2 = q1;
    q1 = q;
  }
  return out;
}

BigRatio alpha_truncation(unsigned mbase, unsigned T) {
  if (mbase < 2) throw InputError("base of the series must be at least 2");
  BigRatio sum = 0;
  for (unsigned i = 0; i < T; ++i) sum += BigRatio(1, boost::multiprecision::pow(BigInt(mbase), 1U << i));
  return sum;
}

std::vector<BigInt> alpha_certified_prefix(unsigned mbase, unsigned T) {
  const auto a = cf_expand(alpha_truncation(mbase, T));
  const auto b = cf_expand(alpha_truncation(mbase, T + 1));
  std::size_t n = 0;
  while (n < a.size() && n < b.size() && a[n] == b[n]) ++n;
  return {a.begin(), a.begin() + static_cast<std::ptrdiff_t>(n == 0 ? 0 : n - 1)};
}

std::vector<BigInt> cf_rational_oracle(unsigned mbase, std::size_t terms, unsigned max_truncation) {
  if (terms < 1) throw InputError("at least one quotient must be requested");
  for (unsigned T = 2; T <= max_truncation; ++T) {
    auto prefix = alpha_certified_prefix(mbase, T);
    if (prefix.size() >= terms) {
      prefix.resize(terms);
      return prefix;
    }
  }
  throw InputError("requested quotients exceed the certified prefix at truncation " + std::to_string(max_truncation));
}

AutomaticCF alpha_k_cf_dfao(unsigned mbase, std::size_t validate_len, const Limits& limits) {
  if (mbase < 3) throw InputError("alpha_k needs k >= 3");
  const std::size_t wanted = std::max<std::size_t>(validate_len, 16000);
  const auto quotients = cf_rational_oracle(mbase, wanted);
  std::vector<unsigned> values;
  for (const auto& q : quotients) values.push_back(static_cast<unsigned>(q));
  std::vector<unsigned> distinct = values;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  std::vector<std::string> alphabet;
  for (unsigned v : distinct) alphabet.push_back(std::to_string(v));
  Word letters;
  for (unsigned v : values)
    letters.push_back(static_cast<Letter>(std::lower_bound(distinct.begin(), distinct.end(), v) - distinct.begin()));
  const auto oracle = oracle_from_letters(std::move(letters), alphabet);
  const Dfao m = dfao_synthesize_from_oracle(oracle, 2, std::min<std::size_t>(limits.max_states, 4096), validate_len);
  return AutomaticCF(m);
}

namespace {

OrderSpec cf_order(const AutomaticCF& x, Extreme e, Direction d) {
  return {e, d, cf_alternating(x.dfao().base(), x.dfao().alphabet().size()), true};
}

}  // namespace

ShiftLimits cf_shift_limits(const AutomaticCF& x, const Limits& limits) {
  const Dfao tail = shift_dfao(x.dfao(), 1, limits);
  return {AutomaticCF(orbit_extreme_dfao(tail, cf_order(x, Extreme::Least, Direction::Forward), limits).dfao),
          AutomaticCF(orbit_extreme_dfao(tail, cf_order(x, Extreme::Greatest, Direction::Forward), limits).dfao)};
}

GaloisLimits cf_galois_ratio_limits(const AutomaticCF& x, const Limits& limits) {
  const Dfao& a = x.dfao();
  const Dfao tail = shift_dfao(a, 1, limits);
  auto extreme = [&](const Dfao& m, Extreme e) {
    return AutomaticCF(orbit_extreme_dfao(m, cf_order(x, e, Direction::Reverse), limits).dfao);
  };
  return {extreme(a, Extreme::Least), extreme(tail, Extreme::Least), extreme(a, Extreme::Greatest),
          extreme(tail, Extreme::Greatest)};
}

}  // namespace autseq
