#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pqseq/quotients.hpp"

namespace pqseq {

/// One period of a periodic sequence with symbols in [0, alphabet_modulus).
/// The paper constructions have period p^2 and alphabet 2 or p; arbitrary
/// periods are allowed for generic analysis.
struct PeriodicSequence {
  uint32_t period = 0;
  uint32_t alphabet_modulus = 2;
  std::vector<uint32_t> symbols;
  std::string label = "custom";

  PeriodicSequence() = default;
  PeriodicSequence(uint32_t modulus, std::vector<uint32_t> syms, std::string lab = "custom");

  uint32_t weight() const;
  bool is_zero() const;
  uint32_t least_period() const;

  /// Same symbols read over a larger alphabet (e.g. a binary sequence
  /// viewed over F_p).  All symbols must be < q.
  PeriodicSequence over_modulus(uint32_t q) const;
};

/// Threshold sequence: symbol 1 where q_{p,w}(u) >= (p+1)/2, evaluated
/// directly for every u in [0, p^2) including multiples of p.
PeriodicSequence gen_threshold(const PrimeParams& params);

/// Legendre-symbol sequence: symbol 1 where q_{p,w}(u) is a quadratic
/// non-residue mod p; 0 where it is a residue or zero.
PeriodicSequence gen_legendre(const PrimeParams& params);

/// Class-indicator sequence over a nonempty index set I:
/// for w >= 2 the ones sit on the classes D_l, l in I;
/// for w = 1 additionally on the multiples {lp : l in I}.
/// Both cases amount to q_{p,w}(u) in I restricted to the right support.
PeriodicSequence gen_indicator(const PrimeParams& params, const std::vector<uint32_t>& index_set);

/// Complement-style sequence (w >= 2 only): ones on the classes D_l for
/// l in J together with all multiples of p.  Equals the bitwise
/// complement of gen_indicator over the complementary index set.
PeriodicSequence gen_complement(const PrimeParams& params, const std::vector<uint32_t>& index_set);

/// Positions u in [0, p^2) with q_{p,w}(u) = 0: the class D_0 plus all of
/// P for w >= 2, or D_0 plus {0} for w = 1.
std::vector<uint32_t> quotient_zero_positions(const PrimeParams& params);

/// Copy of a sequence with the given positions overwritten by one value.
PeriodicSequence substituted(const PeriodicSequence& seq, const std::vector<uint32_t>& positions,
                             uint32_t value);

}  // namespace pqseq
