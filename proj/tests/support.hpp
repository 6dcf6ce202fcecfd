#pragma once

#include <functional>
#include <random>
#include <vector>

#include "autseq/automata.hpp"
#include "autseq/dfao.hpp"
#include "autseq/nfa.hpp"

namespace testing {

using autseq::Symbol;

// Every word over `sigma` symbols of length at most max_len, shortest first
// and in symbol order within a length.
inline std::vector<std::vector<Symbol>> all_words(Symbol sigma, std::size_t max_len) {
  std::vector<std::vector<Symbol>> out{{}};
  std::size_t begin = 0;
  for (std::size_t len = 1; len <= max_len; ++len) {
    const std::size_t end = out.size();
    for (std::size_t i = begin; i < end; ++i)
      for (Symbol s = 0; s < sigma; ++s) {
        auto w = out[i];
        w.push_back(s);
        out.push_back(std::move(w));
      }
    begin = end;
  }
  return out;
}

inline autseq::Nfa random_nfa(std::mt19937& rng, unsigned base, unsigned arity, std::uint32_t states,
                              double density = 0.35) {
  const autseq::MultiTrackAlphabet alpha(base, arity);
  std::bernoulli_distribution edge(density), fin(0.3), init(0.3);
  std::vector<autseq::Nfa::Edge> edges;
  for (autseq::State q = 0; q < states; ++q)
    for (Symbol s = 0; s < alpha.size(); ++s)
      for (autseq::State r = 0; r < states; ++r)
        if (edge(rng)) edges.push_back({q, s, r});
  std::vector<autseq::State> initials{0};
  for (autseq::State q = 1; q < states; ++q)
    if (init(rng)) initials.push_back(q);
  std::vector<std::uint8_t> finals(states);
  for (auto& f : finals) f = fin(rng);
  return autseq::Nfa(alpha, states, std::move(edges), std::move(initials), std::move(finals));
}

// Outputs are constant on each component of the 0-transition graph, which
// makes the automaton zero-stable.
inline autseq::Dfao random_dfao(std::mt19937& rng, unsigned base, std::uint32_t states, unsigned letters) {
  std::uniform_int_distribution<autseq::State> target(0, states - 1);
  std::uniform_int_distribution<autseq::Letter> letter(0, letters - 1);
  std::vector<autseq::State> delta(std::size_t{states} * base);
  for (auto& t : delta) t = target(rng);
  std::vector<autseq::State> parent(states);
  for (autseq::State q = 0; q < states; ++q) parent[q] = q;
  std::function<autseq::State(autseq::State)> find = [&](autseq::State q) {
    return parent[q] == q ? q : parent[q] = find(parent[q]);
  };
  for (autseq::State q = 0; q < states; ++q) parent[find(q)] = find(delta[std::size_t{q} * base]);
  std::vector<autseq::Letter> root_letter(states);
  for (auto& c : root_letter) c = letter(rng);
  std::vector<autseq::Letter> out(states);
  for (autseq::State q = 0; q < states; ++q) out[q] = root_letter[find(q)];
  std::vector<std::string> alphabet;
  for (unsigned c = 0; c < letters; ++c) alphabet.push_back(std::to_string(c));
  return autseq::Dfao(base, alphabet, std::move(delta), 0, std::move(out));
}

}  // namespace testing
