#pragma once

#include <cstdint>
#include <vector>

#include "pqseq/polyring.hpp"
#include "pqseq/seqgen.hpp"

namespace pqseq {

/// Linear complexity by the definition: T - deg(gcd(X^T - 1, S(X))).
/// Works over any prime alphabet and any period; 0 for the zero sequence.
uint32_t lc_gcd(const PeriodicSequence& seq);

/// Linear complexity as the shortest recurrence found by Berlekamp-Massey,
/// fed two full periods so the register length stabilizes.
uint32_t lc_berlekamp_massey(const PeriodicSequence& seq);

/// F_2 engine for period p^2 when both cyclotomic factors are irreducible:
/// the gcd can only be a product of the three known factors, so three
/// divisibility tests determine the complexity.
uint32_t lc_f2_structured(const PeriodicSequence& seq, const CyclotomicFactorizationF2& fact);

/// F_p engine for period p^2: X^{p^2} - 1 = (X-1)^{p^2}, so the gcd degree
/// is the multiplicity of 1 as a root of the generating polynomial.
uint32_t lc_fp_multiplicity(const PeriodicSequence& seq);

/// Element of F_p[X0, X1] / <X0^p - X0, X1^p - X1>, both degrees < p.
/// A p^2-periodic sequence over F_p corresponds to the unique such
/// polynomial with rho(i0, i1) = s_{i0 + i1 p}.
struct BivariatePoly {
  uint32_t p = 0;
  std::vector<uint32_t> coeffs;  // coeff of X0^i X1^j at index i*p + j

  uint32_t coeff(uint32_t i, uint32_t j) const { return coeffs[i * p + j]; }
  uint32_t eval(uint32_t x0, uint32_t x1) const;
  bool is_zero() const;
  int degree_x1() const;

  /// Degree notion under which LC = 1 + degree: the monomial X0^i X1^j
  /// weighs i + p*j (X1 advances the period in steps of p).
  int weighted_degree() const;
};

/// Two-stage Lagrange interpolation of the sequence values on the grid
/// (i0, i1) in [0,p)^2.
BivariatePoly seq_to_bivariate(const PeriodicSequence& seq);

/// 1 + weighted degree of the interpolating polynomial.  Requires the
/// least period to be exactly p^2.
uint32_t lc_bivariate(const PeriodicSequence& seq);

}  // namespace pqseq
