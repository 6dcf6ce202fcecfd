#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <vector>

#include "autseq/automata.hpp"
#include "autseq/dfao.hpp"
#include "autseq/witness.hpp"

namespace autseq {

using BigRatio = boost::multiprecision::cpp_rational;

/// Partial quotients a_0, a_1, ... as a Dfao whose tokens are numerals.
/// Letters are renumbered so that letter order is numeric order.
class AutomaticCF {
 public:
  /// Throws InputError on a non-numeric token or when some a_i with i >= 1
  /// can be 0.
  explicit AutomaticCF(const Dfao& quotients);

  const Dfao& dfao() const noexcept { return dfao_; }
  unsigned value(Letter c) const { return values_.at(c); }
  /// a_0 ... a_{n-1}.
  std::vector<unsigned> quotients(std::size_t n) const;

 private:
  Dfao dfao_;
  std::vector<unsigned> values_;
};

/// Euclidean expansion of a rational; the last quotient of a non-integer is
/// at least 2.
std::vector<BigInt> cf_expand(const BigRatio& x);
BigRatio cf_value(const std::vector<BigInt>& quotients);

struct Convergent {
  BigInt p;
  BigInt q;
};
/// p_n / q_n for every n. Throws InputError when some a_i with i >= 1 is 0.
std::vector<Convergent> convergents(const std::vector<BigInt>& quotients);

/// sum over i < T of mbase^(-2^i).
BigRatio alpha_truncation(unsigned mbase, unsigned T);
/// Quotients shared by the truncations T and T+1, the last shared one
/// dropped.
std::vector<BigInt> alpha_certified_prefix(unsigned mbase, unsigned T);
/// At least `terms` certified quotients of alpha_mbase, raising T as needed.
/// Throws InputError when T = max_truncation does not certify enough.
std::vector<BigInt> cf_rational_oracle(unsigned mbase, std::size_t terms, unsigned max_truncation = 20);

/// Base-2 Dfao of the quotients of alpha_mbase, validated against the
/// rational oracle on `validate_len` quotients.
AutomaticCF alpha_k_cf_dfao(unsigned mbase, std::size_t validate_len = 10000, const Limits& limits = {});

struct ShiftLimits {
  AutomaticCF liminf;
  AutomaticCF limsup;
};
/// Extreme limit points of T^n(x) = [a_n; a_{n+1}, ...] under CF order.
ShiftLimits cf_shift_limits(const AutomaticCF& x, const Limits& limits = {});

struct GaloisLimits {
  AutomaticCF beta;   // liminf p_n / p_{n-1}
  AutomaticCF gamma;  // liminf q_n / q_{n-1}
  AutomaticCF delta;  // limsup p_n / p_{n-1}
  AutomaticCF zeta;   // limsup q_n / q_{n-1}
};
GaloisLimits cf_galois_ratio_limits(const AutomaticCF& x, const Limits& limits = {});

}  // namespace autseq
