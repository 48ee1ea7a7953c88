#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace pqseq {

// ---- modular arithmetic helpers ----

uint64_t pow_mod(uint64_t a, uint64_t e, uint64_t m);
uint64_t inv_mod(uint64_t a, uint64_t m);  // requires gcd(a, m) = 1
uint64_t euler_phi(uint64_t m);
bool is_prime(uint64_t n);  // deterministic trial division, desk-scale only
bool is_odd_prime(uint64_t n);

/// Least t > 0 with a^t = 1 (mod m).  Requires gcd(a, m) = 1.
uint64_t order_mod(uint64_t a, uint64_t m);
bool is_primitive_root(uint64_t a, uint64_t m);

/// Legendre symbol (a/p) in {-1, 0, +1} by Euler's criterion.
int legendre(int64_t a, uint64_t p);

// ---- quotients ----

/// Fermat quotient q_p(u): the residue of (u^{p-1} - u^{p(p-1)})/p mod p.
/// Equals (u^{p-1} - 1)/p mod p for gcd(u, p) = 1 and 0 at multiples of p.
uint32_t fermat_quotient(uint32_t p, uint64_t u);

/// Polynomial quotient q_{p,w}(u): the residue of (u^w - u^{wp})/p mod p.
/// Requires 1 <= w <= p-1; larger exponents reduce via reduce_exponent().
/// At u = lp the value is 0 for w > 1 and l mod p for w = 1.
uint32_t poly_quotient(uint32_t p, uint32_t w, uint64_t u);

struct ReducedExponent {
  uint32_t w1;     // representative exponent, 1 <= w1 <= p-1
  uint32_t scale;  // q_{p,W}(u) = scale * q_{p,w1}(u) mod p for all units u
};

/// Rewrites an arbitrary exponent W >= 1 as W = w1 + w2(p-1) with
/// 1 <= w1 <= p-1 and returns w1 together with the scale w1^{-1}(w1 - w2).
/// Returns nullopt when p | W, in which case q_{p,W} vanishes identically.
std::optional<ReducedExponent> reduce_exponent(uint32_t p, uint64_t big_w);

// ---- prime parameters and the class partition ----

struct PrimeParams {
  uint32_t p = 0;  // odd prime
  uint32_t w = 1;  // exponent, 1 <= w <= p-1
  uint64_t two_order = 0;           // multiplicative order of 2 mod p^2
  bool two_primitive = false;       // two_order == p(p-1)
  std::optional<uint32_t> lambda;   // two_order / p when p | two_order
  bool wieferich = false;           // 2^{p-1} = 1 (mod p^2)

  static PrimeParams make(uint32_t p, uint32_t w);
};

/// The partition of Z_{p^2}: classes D_l of units with q_{p,w}(u) = l,
/// each of size p-1, plus the multiples P = {lp : 0 <= l < p}.
struct ClassPartition {
  uint32_t p = 0;
  uint32_t w = 1;
  std::vector<std::vector<uint32_t>> classes;  // D_0 .. D_{p-1}, sorted
  std::vector<uint32_t> p_multiples;           // P, sorted
};

ClassPartition class_partition(const PrimeParams& params);

}  // namespace pqseq
