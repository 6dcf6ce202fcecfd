#include "autseq/automata.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <string>
#include <unordered_map>

#include "autseq/errors.hpp"

namespace autseq {
namespace {

struct SubsetHash {
  std::size_t operator()(const std::vector<State>& v) const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ULL ^ v.size();
    for (State s : v) h = (h ^ s) * 0x100000001b3ULL + (h >> 29);
    return h;
  }
};

void check_cap(std::size_t count, const Limits& limits, const char* what) {
  if (count > limits.max_states)
    throw ResourceLimitError(std::string(what) + " exceeded the state cap of " +
                             std::to_string(limits.max_states));
}

// Coarsest partition compatible with `classes` and stable under `delta`
// (row-major, stride sigma). Hopcroft's algorithm with a block worklist.
std::vector<std::uint32_t> coarsest_partition(std::uint32_t n, std::uint32_t sigma, std::span<const State> delta,
                                              std::span<const std::uint32_t> classes) {
  std::vector<std::uint32_t> inv_off(std::size_t{sigma} * n + 1, 0);
  for (State q = 0; q < n; ++q)
    for (Symbol s = 0; s < sigma; ++s) ++inv_off[std::size_t{s} * n + delta[std::size_t{q} * sigma + s] + 1];
  for (std::size_t i = 1; i < inv_off.size(); ++i) inv_off[i] += inv_off[i - 1];
  std::vector<State> inv_src(inv_off.back());
  {
    std::vector<std::uint32_t> cursor(inv_off.begin(), inv_off.end() - 1);
    for (State q = 0; q < n; ++q)
      for (Symbol s = 0; s < sigma; ++s) inv_src[cursor[std::size_t{s} * n + delta[std::size_t{q} * sigma + s]]++] = q;
  }

  std::vector<std::uint32_t> class_ids(classes.begin(), classes.end());
  std::vector<std::uint32_t> distinct = class_ids;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  std::vector<std::uint32_t> block(n), pos(n);
  std::vector<State> elems(n);
  std::vector<std::uint32_t> start, end, marked;
  {
    std::vector<std::uint32_t> count(distinct.size() + 1, 0);
    for (State q = 0; q < n; ++q) {
      block[q] = static_cast<std::uint32_t>(std::lower_bound(distinct.begin(), distinct.end(), class_ids[q]) -
                                            distinct.begin());
      ++count[block[q] + 1];
    }
    for (std::size_t b = 1; b < count.size(); ++b) count[b] += count[b - 1];
    start.assign(count.begin(), count.end() - 1);
    end.assign(count.begin() + 1, count.end());
    std::vector<std::uint32_t> cursor = start;
    for (State q = 0; q < n; ++q) {
      pos[q] = cursor[block[q]]++;
      elems[pos[q]] = q;
    }
    marked.assign(distinct.size(), 0);
  }

  std::vector<std::uint32_t> work;
  std::vector<std::uint8_t> in_work(start.size(), 1);
  for (std::uint32_t b = 0; b < start.size(); ++b) work.push_back(b);
  std::vector<State> splitter;
  std::vector<std::uint32_t> touched;
  while (!work.empty()) {
    const std::uint32_t b = work.back();
    work.pop_back();
    in_work[b] = 0;
    splitter.assign(elems.begin() + start[b], elems.begin() + end[b]);
    for (Symbol s = 0; s < sigma; ++s) {
      touched.clear();
      for (State t : splitter) {
        const std::size_t row = std::size_t{s} * n + t;
        for (std::uint32_t i = inv_off[row]; i < inv_off[row + 1]; ++i) {
          const State q = inv_src[i];
          const std::uint32_t B = block[q];
          if (pos[q] < start[B] + marked[B]) continue;
          if (marked[B] == 0) touched.push_back(B);
          const std::uint32_t p = start[B] + marked[B];
          const State other = elems[p];
          std::swap(elems[p], elems[pos[q]]);
          pos[other] = pos[q];
          pos[q] = p;
          ++marked[B];
        }
      }
      for (std::uint32_t B : touched) {
        if (marked[B] == end[B] - start[B]) {
          marked[B] = 0;
          continue;
        }
        const auto nb = static_cast<std::uint32_t>(start.size());
        start.push_back(start[B]);
        end.push_back(start[B] + marked[B]);
        marked.push_back(0);
        in_work.push_back(0);
        start[B] = end[nb];
        marked[B] = 0;
        for (std::uint32_t i = start[nb]; i < end[nb]; ++i) block[elems[i]] = nb;
        if (in_work[B]) {
          work.push_back(nb);
          in_work[nb] = 1;
        } else {
          const std::uint32_t smaller = (end[nb] - start[nb] <= end[B] - start[B]) ? nb : B;
          work.push_back(smaller);
          in_work[smaller] = 1;
        }
      }
    }
  }
  return block;
}

// BFS numbering of blocks from the initial one, so equal languages yield
// identical minimal automata.
std::vector<std::uint32_t> bfs_order(std::uint32_t n_blocks, std::uint32_t sigma, State initial_block,
                                     const std::vector<State>& block_delta) {
  std::vector<std::uint32_t> order(n_blocks, UINT32_MAX);
  std::vector<State> queue{initial_block};
  order[initial_block] = 0;
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (Symbol s = 0; s < sigma; ++s) {
      State t = block_delta[std::size_t{queue[i]} * sigma + s];
      if (order[t] == UINT32_MAX) {
        order[t] = static_cast<std::uint32_t>(queue.size());
        queue.push_back(t);
      }
    }
  return order;
}

enum class ProductOp { And, Or, Xor };

Dfa product(const Dfa& a, const Dfa& b, ProductOp op, const Limits& limits) {
  if (!(a.alphabet() == b.alphabet())) throw InputError("product of automata over different alphabets");
  const Symbol sigma = a.alphabet().size();
  std::unordered_map<std::uint64_t, State> ids;
  std::vector<std::pair<State, State>> pairs;
  auto intern = [&](State x, State y) {
    const std::uint64_t key = (std::uint64_t{x} << 32) | y;
    auto [it, inserted] = ids.try_emplace(key, static_cast<State>(pairs.size()));
    if (inserted) {
      pairs.emplace_back(x, y);
      check_cap(pairs.size(), limits, "product construction");
    }
    return it->second;
  };
  intern(a.initial(), b.initial());
  std::vector<State> delta;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto [x, y] = pairs[i];
    for (Symbol s = 0; s < sigma; ++s) delta.push_back(intern(a.next(x, s), b.next(y, s)));
  }
  std::vector<std::uint8_t> finals(pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const bool fa = a.is_final(pairs[i].first), fb = b.is_final(pairs[i].second);
    finals[i] = op == ProductOp::And ? (fa && fb) : op == ProductOp::Or ? (fa || fb) : (fa != fb);
  }
  return Dfa(a.alphabet(), static_cast<std::uint32_t>(pairs.size()), std::move(delta), 0, std::move(finals));
}

std::vector<std::uint8_t> reachable_set(const Dfa& d) {
  std::vector<std::uint8_t> seen(d.num_states(), 0);
  std::vector<State> stack{d.initial()};
  seen[d.initial()] = 1;
  while (!stack.empty()) {
    State q = stack.back();
    stack.pop_back();
    for (Symbol s = 0; s < d.alphabet().size(); ++s) {
      State t = d.next(q, s);
      if (!seen[t]) {
        seen[t] = 1;
        stack.push_back(t);
      }
    }
  }
  return seen;
}

std::vector<std::uint8_t> coreachable_set(const Dfa& d) {
  const Symbol sigma = d.alphabet().size();
  std::vector<std::vector<State>> rev(d.num_states());
  for (State q = 0; q < d.num_states(); ++q)
    for (Symbol s = 0; s < sigma; ++s) rev[d.next(q, s)].push_back(q);
  std::vector<std::uint8_t> seen(d.num_states(), 0);
  std::vector<State> stack;
  for (State q = 0; q < d.num_states(); ++q)
    if (d.is_final(q)) {
      seen[q] = 1;
      stack.push_back(q);
    }
  while (!stack.empty()) {
    State q = stack.back();
    stack.pop_back();
    for (State p : rev[q])
      if (!seen[p]) {
        seen[p] = 1;
        stack.push_back(p);
      }
  }
  return seen;
}

// Greedy most-significant-digit-first choice of an accepted word of exactly
// `length` symbols; one-track automata only.
BigInt extreme_of_length(const Dfa& d, std::size_t length, bool maximize) {
  const unsigned k = d.alphabet().base();
  const std::uint32_t n = d.num_states();
  std::vector<std::vector<std::uint8_t>> reach(length + 1, std::vector<std::uint8_t>(n, 0));
  reach[0][d.initial()] = 1;
  for (std::size_t j = 0; j < length; ++j)
    for (State q = 0; q < n; ++q)
      if (reach[j][q])
        for (Digit x = 0; x < k; ++x) reach[j + 1][d.next(q, x)] = 1;
  std::vector<std::uint8_t> good(n);
  for (State q = 0; q < n; ++q) good[q] = d.is_final(q);
  std::vector<Digit> digits(length, 0);
  std::vector<std::uint8_t> pre(n);
  for (std::size_t j = length; j-- > 0;) {
    bool chosen = false;
    for (unsigned step = 0; step < k && !chosen; ++step) {
      const Digit x = maximize ? k - 1 - step : step;
      bool hit = false;
      for (State q = 0; q < n; ++q) {
        pre[q] = good[d.next(q, x)];
        hit = hit || (pre[q] && reach[j][q]);
      }
      if (hit) {
        digits[j] = x;
        good = pre;
        chosen = true;
      }
    }
    if (!chosen) throw InternalError("no accepted word of the expected length");
  }
  return from_digits(digits, k);
}

}  // namespace

Dfa determinize(const Nfa& n, const Limits& limits) {
  const Symbol sigma = n.alphabet().size();
  std::unordered_map<std::vector<State>, State, SubsetHash> ids;
  std::vector<const std::vector<State>*> subsets;
  auto intern = [&](std::vector<State>&& subset) {
    auto [it, inserted] = ids.try_emplace(std::move(subset), static_cast<State>(subsets.size()));
    if (inserted) {
      subsets.push_back(&it->first);
      check_cap(subsets.size(), limits, "subset construction");
    }
    return it->second;
  };
  intern(std::vector<State>(n.initials().begin(), n.initials().end()));
  std::vector<State> delta;
  std::vector<std::uint32_t> mark(n.num_states(), 0);
  std::uint32_t epoch = 0;
  std::vector<State> next;
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    for (Symbol s = 0; s < sigma; ++s) {
      ++epoch;
      next.clear();
      for (State q : *subsets[i])
        for (State t : n.successors(q, s))
          if (mark[t] != epoch) {
            mark[t] = epoch;
            next.push_back(t);
          }
      std::sort(next.begin(), next.end());
      delta.push_back(intern(std::vector<State>(next)));
    }
  }
  std::vector<std::uint8_t> finals(subsets.size(), 0);
  for (std::size_t i = 0; i < subsets.size(); ++i)
    finals[i] = std::any_of(subsets[i]->begin(), subsets[i]->end(), [&](State q) { return n.is_final(q); });
  return Dfa(n.alphabet(), static_cast<std::uint32_t>(subsets.size()), std::move(delta), 0, std::move(finals));
}

Dfa complement(const Dfa& d) {
  std::vector<std::uint8_t> finals(d.finals().begin(), d.finals().end());
  for (auto& f : finals) f = !f;
  return Dfa(d.alphabet(), d.num_states(), std::vector<State>(d.transitions().begin(), d.transitions().end()),
             d.initial(), std::move(finals));
}

Dfa intersect(const Dfa& a, const Dfa& b, const Limits& limits) { return product(a, b, ProductOp::And, limits); }
Dfa unite(const Dfa& a, const Dfa& b, const Limits& limits) { return product(a, b, ProductOp::Or, limits); }

Nfa project(const Dfa& d, std::span<const unsigned> tracks) {
  const MultiTrackAlphabet& src = d.alphabet();
  std::vector<std::uint8_t> drop(src.arity(), 0);
  for (unsigned t : tracks) {
    if (t >= src.arity()) throw InputError("projected track index out of range");
    if (drop[t]) throw InputError("track projected twice");
    drop[t] = 1;
  }
  if (tracks.size() >= src.arity()) throw InputError("projection must keep at least one track");
  const MultiTrackAlphabet dst(src.base(), src.arity() - static_cast<unsigned>(tracks.size()));
  std::vector<Symbol> image(src.size());
  std::vector<Digit> kept;
  for (Symbol s = 0; s < src.size(); ++s) {
    kept.clear();
    for (unsigned t = 0; t < src.arity(); ++t)
      if (!drop[t]) kept.push_back(src.digit(s, t));
    image[s] = dst.encode(kept);
  }
  std::vector<Nfa::Edge> edges;
  edges.reserve(std::size_t{d.num_states()} * src.size());
  for (State q = 0; q < d.num_states(); ++q)
    for (Symbol s = 0; s < src.size(); ++s) edges.push_back({q, image[s], d.next(q, s)});
  return Nfa(dst, d.num_states(), std::move(edges), {d.initial()},
             std::vector<std::uint8_t>(d.finals().begin(), d.finals().end()));
}

Nfa project(const Dfa& d, unsigned track) {
  const unsigned tracks[] = {track};
  return project(d, tracks);
}

Nfa project(const Nfa& n, unsigned track) {
  const MultiTrackAlphabet& src = n.alphabet();
  if (track >= src.arity()) throw InputError("projected track index out of range");
  if (src.arity() < 2) throw InputError("projection must keep at least one track");
  const MultiTrackAlphabet dst(src.base(), src.arity() - 1);
  std::vector<Digit> kept;
  std::vector<Nfa::Edge> edges;
  for (Symbol s = 0; s < src.size(); ++s) {
    kept.clear();
    for (unsigned t = 0; t < src.arity(); ++t)
      if (t != track) kept.push_back(src.digit(s, t));
    const Symbol image = dst.encode(kept);
    for (State q = 0; q < n.num_states(); ++q)
      for (State t : n.successors(q, s)) edges.push_back({q, image, t});
  }
  return Nfa(dst, n.num_states(), std::move(edges), std::vector<State>(n.initials().begin(), n.initials().end()),
             std::vector<std::uint8_t>(n.finals().begin(), n.finals().end()));
}

Nfa pad_closure(const Nfa& n) {
  std::vector<std::vector<State>> zero_pred(n.num_states());
  for (State q = 0; q < n.num_states(); ++q)
    for (State t : n.successors(q, MultiTrackAlphabet::zero())) zero_pred[t].push_back(q);
  std::vector<std::uint8_t> finals(n.finals().begin(), n.finals().end());
  std::vector<State> stack;
  for (State q = 0; q < n.num_states(); ++q)
    if (finals[q]) stack.push_back(q);
  while (!stack.empty()) {
    State q = stack.back();
    stack.pop_back();
    for (State p : zero_pred[q])
      if (!finals[p]) {
        finals[p] = 1;
        stack.push_back(p);
      }
  }
  return n.with_finals(std::move(finals));
}

Dfa cylindrify(const Dfa& d, unsigned new_arity, std::span<const unsigned> positions) {
  const MultiTrackAlphabet& src = d.alphabet();
  if (positions.size() != src.arity()) throw InputError("cylindrify needs one position per track");
  const MultiTrackAlphabet dst(src.base(), new_arity);
  for (unsigned p : positions)
    if (p >= new_arity) throw InputError("cylindrify position out of range");
  std::vector<Symbol> image(dst.size());
  std::vector<Digit> digits(src.arity());
  for (Symbol s = 0; s < dst.size(); ++s) {
    for (unsigned t = 0; t < src.arity(); ++t) digits[t] = dst.digit(s, positions[t]);
    image[s] = src.encode(digits);
  }
  std::vector<State> delta(std::size_t{d.num_states()} * dst.size());
  for (State q = 0; q < d.num_states(); ++q)
    for (Symbol s = 0; s < dst.size(); ++s) delta[std::size_t{q} * dst.size() + s] = d.next(q, image[s]);
  return Dfa(dst, d.num_states(), std::move(delta), d.initial(),
             std::vector<std::uint8_t>(d.finals().begin(), d.finals().end()));
}

Dfa canonical_filter(unsigned base, unsigned arity) {
  const MultiTrackAlphabet a(base, arity);
  // State 0: empty or last symbol nonzero (accepting). State 1: last symbol zero.
  std::vector<State> delta(2 * std::size_t{a.size()});
  for (State q = 0; q < 2; ++q)
    for (Symbol s = 0; s < a.size(); ++s) delta[q * a.size() + s] = s == MultiTrackAlphabet::zero() ? 1 : 0;
  return Dfa(a, 2, std::move(delta), 0, {1, 0});
}

Dfa reachable_part(const Dfa& d) {
  const Symbol sigma = d.alphabet().size();
  std::vector<std::uint32_t> order(d.num_states(), UINT32_MAX);
  std::vector<State> queue{d.initial()};
  order[d.initial()] = 0;
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (Symbol s = 0; s < sigma; ++s) {
      State t = d.next(queue[i], s);
      if (order[t] == UINT32_MAX) {
        order[t] = static_cast<std::uint32_t>(queue.size());
        queue.push_back(t);
      }
    }
  std::vector<State> delta(queue.size() * sigma);
  std::vector<std::uint8_t> finals(queue.size());
  for (std::size_t i = 0; i < queue.size(); ++i) {
    finals[i] = d.is_final(queue[i]);
    for (Symbol s = 0; s < sigma; ++s) delta[i * sigma + s] = order[d.next(queue[i], s)];
  }
  return Dfa(d.alphabet(), static_cast<std::uint32_t>(queue.size()), std::move(delta), 0, std::move(finals));
}

Dfa minimize_dfa(const Dfa& d) {
  const Dfa r = reachable_part(d);
  const Symbol sigma = r.alphabet().size();
  std::vector<std::uint32_t> classes(r.finals().begin(), r.finals().end());
  const auto block = coarsest_partition(r.num_states(), sigma, r.transitions(), classes);
  const std::uint32_t nb = *std::max_element(block.begin(), block.end()) + 1;
  std::vector<State> block_delta(std::size_t{nb} * sigma);
  std::vector<std::uint8_t> block_final(nb, 0);
  for (State q = 0; q < r.num_states(); ++q) {
    block_final[block[q]] = r.is_final(q);
    for (Symbol s = 0; s < sigma; ++s) block_delta[std::size_t{block[q]} * sigma + s] = block[r.next(q, s)];
  }
  const auto order = bfs_order(nb, sigma, block[r.initial()], block_delta);
  std::vector<State> delta(std::size_t{nb} * sigma);
  std::vector<std::uint8_t> finals(nb);
  for (std::uint32_t b = 0; b < nb; ++b) {
    finals[order[b]] = block_final[b];
    for (Symbol s = 0; s < sigma; ++s)
      delta[std::size_t{order[b]} * sigma + s] = order[block_delta[std::size_t{b} * sigma + s]];
  }
  return Dfa(r.alphabet(), nb, std::move(delta), 0, std::move(finals));
}

Dfao minimize_dfao(const Dfao& m) {
  const unsigned k = m.base();
  // Reachable part in BFS order.
  std::vector<std::uint32_t> order(m.num_states(), UINT32_MAX);
  std::vector<State> queue{m.initial()};
  order[m.initial()] = 0;
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (Digit d = 0; d < k; ++d) {
      State t = m.next(queue[i], d);
      if (order[t] == UINT32_MAX) {
        order[t] = static_cast<std::uint32_t>(queue.size());
        queue.push_back(t);
      }
    }
  const auto n = static_cast<std::uint32_t>(queue.size());
  std::vector<State> delta(std::size_t{n} * k);
  std::vector<std::uint32_t> classes(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    classes[i] = m.output(queue[i]);
    for (Digit d = 0; d < k; ++d) delta[std::size_t{i} * k + d] = order[m.next(queue[i], d)];
  }
  const auto block = coarsest_partition(n, k, delta, classes);
  const std::uint32_t nb = *std::max_element(block.begin(), block.end()) + 1;
  std::vector<State> block_delta(std::size_t{nb} * k);
  std::vector<Letter> block_out(nb);
  for (State q = 0; q < n; ++q) {
    block_out[block[q]] = classes[q];
    for (Digit d = 0; d < k; ++d) block_delta[std::size_t{block[q]} * k + d] = block[delta[std::size_t{q} * k + d]];
  }
  const auto bo = bfs_order(nb, k, block[0], block_delta);
  std::vector<State> out_delta(std::size_t{nb} * k);
  std::vector<Letter> outputs(nb);
  for (std::uint32_t b = 0; b < nb; ++b) {
    outputs[bo[b]] = block_out[b];
    for (Digit d = 0; d < k; ++d) out_delta[std::size_t{bo[b]} * k + d] = bo[block_delta[std::size_t{b} * k + d]];
  }
  return Dfao(k, m.alphabet(), std::move(out_delta), 0, std::move(outputs));
}

bool is_empty(const Dfa& d) {
  const auto seen = reachable_set(d);
  for (State q = 0; q < d.num_states(); ++q)
    if (seen[q] && d.is_final(q)) return false;
  return true;
}

std::optional<std::vector<Symbol>> shortest_word(const Dfa& d) {
  const Symbol sigma = d.alphabet().size();
  std::vector<State> parent(d.num_states(), UINT32_MAX);
  std::vector<Symbol> via(d.num_states(), 0);
  std::vector<std::uint8_t> seen(d.num_states(), 0);
  auto path_to = [&](State q) {
    std::vector<Symbol> word;
    while (q != d.initial()) {
      word.push_back(via[q]);
      q = parent[q];
    }
    std::reverse(word.begin(), word.end());
    return word;
  };
  if (d.is_final(d.initial())) return std::vector<Symbol>{};
  std::deque<State> queue{d.initial()};
  seen[d.initial()] = 1;
  while (!queue.empty()) {
    State q = queue.front();
    queue.pop_front();
    for (Symbol s = 0; s < sigma; ++s) {
      State t = d.next(q, s);
      if (seen[t]) continue;
      seen[t] = 1;
      parent[t] = q;
      via[t] = s;
      if (d.is_final(t)) return path_to(t);
      queue.push_back(t);
    }
  }
  return std::nullopt;
}

std::optional<Witness> shortest_witness(const Dfa& d) {
  auto word = shortest_word(d);
  if (!word) return std::nullopt;
  return decode_word(d.alphabet(), *word);
}

bool is_infinite(const Dfa& d) {
  const auto reach = reachable_set(d);
  const auto coreach = coreachable_set(d);
  const Symbol sigma = d.alphabet().size();
  std::vector<std::uint32_t> indegree(d.num_states(), 0);
  std::size_t useful = 0;
  for (State q = 0; q < d.num_states(); ++q) {
    if (!(reach[q] && coreach[q])) continue;
    ++useful;
    for (Symbol s = 0; s < sigma; ++s) {
      State t = d.next(q, s);
      if (reach[t] && coreach[t]) ++indegree[t];
    }
  }
  std::vector<State> ready;
  for (State q = 0; q < d.num_states(); ++q)
    if (reach[q] && coreach[q] && indegree[q] == 0) ready.push_back(q);
  std::size_t removed = 0;
  while (!ready.empty()) {
    State q = ready.back();
    ready.pop_back();
    ++removed;
    for (Symbol s = 0; s < sigma; ++s) {
      State t = d.next(q, s);
      if (reach[t] && coreach[t] && --indegree[t] == 0) ready.push_back(t);
    }
  }
  return removed < useful;
}

std::optional<BigInt> least_integer(const Dfa& d) {
  if (d.alphabet().arity() != 1) throw InputError("least_integer needs a one-track automaton");
  const auto word = shortest_word(d);
  if (!word) return std::nullopt;
  return extreme_of_length(d, word->size(), false);
}

std::optional<BigInt> greatest_integer(const Dfa& d) {
  if (d.alphabet().arity() != 1) throw InputError("greatest_integer needs a one-track automaton");
  const Dfa c = minimize_dfa(intersect(d, canonical_filter(d.alphabet().base(), 1)));
  if (is_empty(c)) return std::nullopt;
  if (is_infinite(c)) throw InputError("language is infinite; no greatest integer");
  // Longest accepted length over the acyclic useful part.
  const auto reach = reachable_set(c);
  const auto coreach = coreachable_set(c);
  const unsigned k = c.alphabet().base();
  std::vector<long> longest(c.num_states(), -1);
  // Memoized DFS (graph restricted to useful states is acyclic).
  std::vector<State> stack;
  std::vector<std::uint8_t> done(c.num_states(), 0);
  auto useful = [&](State q) { return reach[q] && coreach[q]; };
  std::function<long(State)> visit = [&](State q) -> long {
    if (done[q]) return longest[q];
    long best = c.is_final(q) ? 0 : -1;
    for (Digit x = 0; x < k; ++x) {
      State t = c.next(q, x);
      if (!useful(t)) continue;
      long sub = visit(t);
      if (sub >= 0) best = std::max(best, sub + 1);
    }
    done[q] = 1;
    return longest[q] = best;
  };
  const long length = visit(c.initial());
  return extreme_of_length(c, static_cast<std::size_t>(length), true);
}

bool equivalent(const Dfa& a, const Dfa& b) { return is_empty(product(a, b, ProductOp::Xor, Limits{})); }

}  // namespace autseq
