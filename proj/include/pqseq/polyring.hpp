#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "pqseq/gf2poly.hpp"
#include "pqseq/seqgen.hpp"

namespace pqseq {

/// Dense univariate polynomial over a prime field F_q, canonical form:
/// no trailing zero coefficients, the zero polynomial has an empty
/// coefficient array and degree -1.
class FieldPoly {
 public:
  explicit FieldPoly(uint32_t modulus);
  FieldPoly(uint32_t modulus, std::vector<uint32_t> coeffs);
  static FieldPoly monomial(uint32_t modulus, uint32_t degree, uint32_t coeff = 1);
  static FieldPoly x_pow_minus_one(uint32_t modulus, uint32_t t);

  uint32_t modulus() const { return q_; }
  const std::vector<uint32_t>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return (int)coeffs_.size() - 1; }
  uint32_t coeff(size_t i) const { return i < coeffs_.size() ? coeffs_[i] : 0; }

  uint32_t eval(uint32_t x) const;
  FieldPoly monic() const;

  FieldPoly& operator+=(const FieldPoly& rhs);
  FieldPoly& operator-=(const FieldPoly& rhs);
  friend FieldPoly operator+(FieldPoly a, const FieldPoly& b) { return a += b; }
  friend FieldPoly operator-(FieldPoly a, const FieldPoly& b) { return a -= b; }
  friend FieldPoly operator*(const FieldPoly& a, const FieldPoly& b);
  friend bool operator==(const FieldPoly& a, const FieldPoly& b) {
    return a.q_ == b.q_ && a.coeffs_ == b.coeffs_;
  }

 private:
  void canonicalize();
  uint32_t q_;
  std::vector<uint32_t> coeffs_;
};

/// Quotient and remainder of f by a nonzero divisor.
std::pair<FieldPoly, FieldPoly> poly_divmod(const FieldPoly& f, const FieldPoly& d);
FieldPoly poly_mod(const FieldPoly& f, const FieldPoly& d);

/// Monic gcd by the Euclidean algorithm; F_2 inputs run on the packed
/// representation.  Both inputs zero is an error.
FieldPoly poly_gcd(const FieldPoly& a, const FieldPoly& b);

bool divides(const FieldPoly& d, const FieldPoly& f);

/// Binomial coefficient mod a prime via Lucas' theorem.
uint32_t binom_mod(uint64_t n, uint64_t k, uint32_t q);

/// j-th Hasse derivative: coefficient of X^{n-j} is C(n, j) a_n.
FieldPoly hasse_derivative(const FieldPoly& f, uint32_t j);

/// Largest m with (X-1)^m | f, found as the least j whose j-th Hasse
/// derivative is nonzero at 1 (j = 0 meaning f itself).
uint32_t multiplicity_at_one(const FieldPoly& f);

/// Same quantity by repeated synthetic division by (X-1); kept as an
/// independent cross-check route.
uint32_t multiplicity_at_one_by_division(const FieldPoly& f);

/// X^{p^2} + 1 over F_2 split into its three cyclotomic factors
/// (X+1) * (1+X+...+X^{p-1}) * (1+X^p+...+X^{(p-1)p}), with flags telling
/// whether the larger two are irreducible (equivalent to 2 generating the
/// units mod p and mod p^2 respectively).
struct CyclotomicFactorizationF2 {
  uint32_t p = 0;
  FieldPoly x_plus_one;
  FieldPoly unit_sum;    // Q_p(X) = 1 + X + ... + X^{p-1}
  FieldPoly comb;        // 1 + X^p + X^{2p} + ... + X^{(p-1)p}
  bool unit_sum_irreducible = false;
  bool comb_irreducible = false;
};

CyclotomicFactorizationF2 cyclotomic_factorization_f2(uint32_t p);

/// Generating polynomial S(X) = sum of s_u X^u over one period.
FieldPoly generating_poly(const PeriodicSequence& seq);

GF2Poly to_gf2(const FieldPoly& f);
FieldPoly from_gf2(const GF2Poly& f);

}  // namespace pqseq
