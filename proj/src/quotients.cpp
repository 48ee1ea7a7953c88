#include "pqseq/quotients.hpp"

#include <stdexcept>

namespace pqseq {

namespace {

constexpr uint32_t kMaxPrime = 46337;  // keeps p^2 < 2^31

void check_odd_prime(uint64_t p) {
  if (!is_odd_prime(p)) {
    throw std::invalid_argument("p must be an odd prime, got " + std::to_string(p));
  }
  if (p > kMaxPrime) {
    throw std::invalid_argument("p too large for desk-scale analysis: " + std::to_string(p));
  }
}

std::vector<uint64_t> prime_factors(uint64_t n) {
  std::vector<uint64_t> out;
  for (uint64_t d = 2; d * d <= n; d += (d == 2) ? 1 : 2) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

uint64_t gcd_u64(uint64_t a, uint64_t b) {
  while (b) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

}  // namespace

uint64_t pow_mod(uint64_t a, uint64_t e, uint64_t m) {
  if (m == 1) return 0;
  uint64_t base = a % m;
  uint64_t out = 1;
  while (e > 0) {
    if (e & 1) out = (unsigned __int128)out * base % m;
    base = (unsigned __int128)base * base % m;
    e >>= 1;
  }
  return out;
}

uint64_t inv_mod(uint64_t a, uint64_t m) {
  // extended Euclid; a need not be reduced
  int64_t t = 0, new_t = 1;
  int64_t r = (int64_t)m, new_r = (int64_t)(a % m);
  while (new_r != 0) {
    int64_t q = r / new_r;
    t -= q * new_t;
    std::swap(t, new_t);
    r -= q * new_r;
    std::swap(r, new_r);
  }
  if (r != 1) throw std::invalid_argument("inv_mod: argument not invertible");
  if (t < 0) t += (int64_t)m;
  return (uint64_t)t;
}

uint64_t euler_phi(uint64_t m) {
  uint64_t out = m;
  for (uint64_t f : prime_factors(m)) out -= out / f;
  return out;
}

bool is_prime(uint64_t n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

bool is_odd_prime(uint64_t n) { return n >= 3 && n % 2 == 1 && is_prime(n); }

uint64_t order_mod(uint64_t a, uint64_t m) {
  if (m < 2) throw std::invalid_argument("order_mod: modulus must be >= 2");
  if (gcd_u64(a % m, m) != 1) {
    throw std::invalid_argument("order_mod: base not coprime to modulus");
  }
  uint64_t order = euler_phi(m);
  for (uint64_t f : prime_factors(order)) {
    while (order % f == 0 && pow_mod(a, order / f, m) == 1) order /= f;
  }
  return order;
}

bool is_primitive_root(uint64_t a, uint64_t m) { return order_mod(a, m) == euler_phi(m); }

int legendre(int64_t a, uint64_t p) {
  check_odd_prime(p);
  int64_t r = a % (int64_t)p;
  if (r < 0) r += (int64_t)p;
  if (r == 0) return 0;
  uint64_t e = pow_mod((uint64_t)r, (p - 1) / 2, p);
  return e == 1 ? 1 : -1;
}

uint32_t poly_quotient(uint32_t p, uint32_t w, uint64_t u) {
  check_odd_prime(p);
  if (w < 1 || w > p - 1) {
    throw std::invalid_argument("poly_quotient: w must satisfy 1 <= w <= p-1 (reduce first)");
  }
  // u^w and u^{wp} agree mod p, so their difference lifted to [0, p^2)
  // is a multiple of p; dividing that lift by p gives the quotient mod p.
  uint64_t p2 = (uint64_t)p * p;
  uint64_t a = pow_mod(u, w, p2);
  uint64_t b = pow_mod(u, (uint64_t)w * p, p2);
  uint64_t d = (a + p2 - b) % p2;
  return (uint32_t)((d / p) % p);
}

uint32_t fermat_quotient(uint32_t p, uint64_t u) {
  check_odd_prime(p);
  return poly_quotient(p, p - 1, u);
}

std::optional<ReducedExponent> reduce_exponent(uint32_t p, uint64_t big_w) {
  check_odd_prime(p);
  if (big_w == 0) throw std::invalid_argument("reduce_exponent: W must be positive");
  if (big_w % p == 0) return std::nullopt;  // q_{p,lp} vanishes identically
  uint64_t w1 = big_w % (p - 1);
  if (w1 == 0) w1 = p - 1;
  uint64_t w2 = (big_w - w1) / (p - 1);
  uint64_t diff = (w1 + (uint64_t)p - (w2 % p)) % p;
  uint64_t scale = inv_mod(w1 % p, p) * diff % p;
  return ReducedExponent{(uint32_t)w1, (uint32_t)scale};
}

PrimeParams PrimeParams::make(uint32_t p, uint32_t w) {
  check_odd_prime(p);
  if (w < 1 || w > p - 1) {
    throw std::invalid_argument("w must satisfy 1 <= w <= p-1, got " + std::to_string(w));
  }
  PrimeParams out;
  out.p = p;
  out.w = w;
  uint64_t p2 = (uint64_t)p * p;
  out.two_order = order_mod(2, p2);
  out.two_primitive = out.two_order == (uint64_t)p * (p - 1);
  out.wieferich = pow_mod(2, p - 1, p2) == 1;
  if (out.two_order % p == 0) out.lambda = (uint32_t)(out.two_order / p);
  return out;
}

ClassPartition class_partition(const PrimeParams& params) {
  const uint32_t p = params.p;
  ClassPartition out;
  out.p = p;
  out.w = params.w;
  out.classes.assign(p, {});
  uint64_t p2 = (uint64_t)p * p;
  for (uint64_t u = 0; u < p2; ++u) {
    if (u % p == 0) {
      out.p_multiples.push_back((uint32_t)u);
    } else {
      out.classes[poly_quotient(p, params.w, u)].push_back((uint32_t)u);
    }
  }
  return out;
}

}  // namespace pqseq
