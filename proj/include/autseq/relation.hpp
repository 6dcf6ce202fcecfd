#pragma once

#include <initializer_list>
#include <map>
#include <string>
#include <vector>

#include "autseq/arith.hpp"
#include "autseq/automata.hpp"

namespace autseq {

/// Sizes recorded by one quantifier step.
struct StageStats {
  std::size_t nfa_states = 0;
  std::size_t dfa_states = 0;
  std::size_t minimized_states = 0;
};

/// A synchronized relation over named integer variables: track t of the DFA
/// carries variable vars()[t]. Every relation built here is padding
/// invariant, so it denotes a set of integer tuples.
class Relation {
 public:
  Relation(std::vector<std::string> vars, Dfa dfa);

  const std::vector<std::string>& vars() const noexcept { return vars_; }
  const Dfa& dfa() const noexcept { return dfa_; }
  unsigned base() const noexcept { return dfa_.alphabet().base(); }

  /// Same relation over `target` (a superset of vars(), any order).
  Relation over(const std::vector<std::string>& target) const;
  Relation renamed(const std::map<std::string, std::string>& names) const;

  bool empty() const { return is_empty(dfa_); }

 private:
  std::vector<std::string> vars_;
  Dfa dfa_;
};

Relation conj(const Relation& a, const Relation& b, const Limits& limits = {});
Relation conj(std::initializer_list<Relation> parts, const Limits& limits = {});
Relation disj(const Relation& a, const Relation& b, const Limits& limits = {});
Relation negate(const Relation& r);
/// Existential projection of `vars` followed by padding closure,
/// determinization and minimization.
Relation exists(const std::vector<std::string>& vars, const Relation& r, const Limits& limits = {},
                StageStats* stats = nullptr);
Relation forall(const std::vector<std::string>& vars, const Relation& r, const Limits& limits = {},
                StageStats* stats = nullptr);

/// Atomic relations.
namespace atom {
Relation add(unsigned base, const std::string& x, const std::string& y, const std::string& z);
Relation compare(unsigned base, const std::string& x, CompareOp op, const std::string& y);
/// y = c * x; c = 1 yields equality.
Relation scale(unsigned base, unsigned c, const std::string& x, const std::string& y);
Relation constant(unsigned base, const std::string& x, const BigInt& value);
Relation compare_const(unsigned base, const std::string& x, CompareOp op, const BigInt& value);
/// Machine t reads variable vars[t]; accepts iff pred(outputs).
Relation outputs(const std::vector<const Dfao*>& machines, const std::vector<std::string>& vars,
                 const OutputPredicate& pred);
Relation seq_eq(const Dfao& m, const std::string& x, const std::string& y);
Relation seq_neq(const Dfao& m, const std::string& x, const std::string& y);
Relation seq_letter(const Dfao& m, const std::string& x, Letter c);
}  // namespace atom

}  // namespace autseq
