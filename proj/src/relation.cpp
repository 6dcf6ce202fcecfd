#include "autseq/relation.hpp"

#include <algorithm>

#include "autseq/errors.hpp"

namespace autseq {
namespace {

unsigned index_of(const std::vector<std::string>& vars, const std::string& v) {
  auto it = std::find(vars.begin(), vars.end(), v);
  if (it == vars.end()) throw InputError("variable '" + v + "' is not free in the relation");
  return static_cast<unsigned>(it - vars.begin());
}

std::vector<std::string> merged(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  std::vector<std::string> out = a;
  for (const auto& v : b)
    if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
  return out;
}

}  // namespace

Relation::Relation(std::vector<std::string> vars, Dfa dfa) : vars_(std::move(vars)), dfa_(std::move(dfa)) {
  if (vars_.size() != dfa_.alphabet().arity()) throw InputError("relation variables do not match DFA arity");
  auto sorted = vars_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw InputError("relation has a repeated variable");
}

Relation Relation::over(const std::vector<std::string>& target) const {
  if (target == vars_) return *this;
  std::vector<unsigned> positions;
  for (const auto& v : vars_) positions.push_back(index_of(target, v));
  return Relation(target, cylindrify(dfa_, static_cast<unsigned>(target.size()), positions));
}

Relation Relation::renamed(const std::map<std::string, std::string>& names) const {
  std::vector<std::string> vars = vars_;
  for (auto& v : vars)
    if (auto it = names.find(v); it != names.end()) v = it->second;
  return Relation(std::move(vars), dfa_);
}

Relation conj(const Relation& a, const Relation& b, const Limits& limits) {
  const auto vars = merged(a.vars(), b.vars());
  return Relation(vars, minimize_dfa(intersect(a.over(vars).dfa(), b.over(vars).dfa(), limits)));
}

Relation conj(std::initializer_list<Relation> parts, const Limits& limits) {
  if (parts.size() == 0) throw InputError("empty conjunction");
  auto it = parts.begin();
  Relation acc = *it++;
  for (; it != parts.end(); ++it) acc = conj(acc, *it, limits);
  return acc;
}

Relation disj(const Relation& a, const Relation& b, const Limits& limits) {
  const auto vars = merged(a.vars(), b.vars());
  return Relation(vars, minimize_dfa(unite(a.over(vars).dfa(), b.over(vars).dfa(), limits)));
}

Relation negate(const Relation& r) { return Relation(r.vars(), complement(r.dfa())); }

Relation exists(const std::vector<std::string>& vars, const Relation& r, const Limits& limits, StageStats* stats) {
  if (vars.empty()) return r;
  std::vector<unsigned> tracks;
  std::vector<std::string> kept;
  for (const auto& v : vars) tracks.push_back(index_of(r.vars(), v));
  for (const auto& v : r.vars())
    if (std::find(vars.begin(), vars.end(), v) == vars.end()) kept.push_back(v);
  const Nfa n = pad_closure(project(r.dfa(), tracks));
  const Dfa d = determinize(n, limits);
  Dfa m = minimize_dfa(d);
  if (stats) *stats = {n.num_states(), d.num_states(), m.num_states()};
  return Relation(std::move(kept), std::move(m));
}

Relation forall(const std::vector<std::string>& vars, const Relation& r, const Limits& limits, StageStats* stats) {
  return negate(exists(vars, negate(r), limits, stats));
}

namespace atom {

Relation add(unsigned base, const std::string& x, const std::string& y, const std::string& z) {
  return Relation({x, y, z}, rel_add(base));
}

Relation compare(unsigned base, const std::string& x, CompareOp op, const std::string& y) {
  return Relation({x, y}, rel_compare(base, op));
}

Relation scale(unsigned base, unsigned c, const std::string& x, const std::string& y) {
  return Relation({x, y}, c == 1 ? rel_compare(base, CompareOp::EQ) : rel_scale(base, c));
}

Relation constant(unsigned base, const std::string& x, const BigInt& value) {
  return Relation({x}, rel_const(base, value));
}

Relation compare_const(unsigned base, const std::string& x, CompareOp op, const BigInt& value) {
  const std::string c = x + "#const";
  return exists({c}, conj(compare(base, x, op, c), constant(base, c, value)));
}

Relation outputs(const std::vector<const Dfao*>& machines, const std::vector<std::string>& vars,
                 const OutputPredicate& pred) {
  if (machines.size() != vars.size()) throw InputError("one variable per machine required");
  std::vector<std::string> distinct = vars;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  if (distinct.size() == vars.size()) return Relation(vars, rel_outputs(machines, pred));
  // A variable read by several machines: build over fresh names, then equate.
  std::vector<std::string> fresh;
  for (std::size_t t = 0; t < vars.size(); ++t) fresh.push_back(vars[t] + "#" + std::to_string(t));
  Relation r(fresh, rel_outputs(machines, pred));
  std::vector<std::string> hidden;
  for (std::size_t t = 0; t < vars.size(); ++t) {
    r = conj(r, scale(machines[t]->base(), 1, fresh[t], vars[t]));
    hidden.push_back(fresh[t]);
  }
  return exists(hidden, r);
}

Relation seq_eq(const Dfao& m, const std::string& x, const std::string& y) {
  return Relation({x, y}, rel_seq_eq(m));
}

Relation seq_neq(const Dfao& m, const std::string& x, const std::string& y) {
  return negate(seq_eq(m, x, y));
}

Relation seq_letter(const Dfao& m, const std::string& x, Letter c) { return Relation({x}, rel_seq_letter(m, c)); }

}  // namespace atom
}  // namespace autseq
