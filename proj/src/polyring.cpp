#include "pqseq/polyring.hpp"

#include <stdexcept>

#include "pqseq/quotients.hpp"

namespace pqseq {

FieldPoly::FieldPoly(uint32_t modulus) : q_(modulus) {
  if (!is_prime(modulus)) throw std::invalid_argument("FieldPoly: modulus must be prime");
}

FieldPoly::FieldPoly(uint32_t modulus, std::vector<uint32_t> coeffs)
    : q_(modulus), coeffs_(std::move(coeffs)) {
  if (!is_prime(modulus)) throw std::invalid_argument("FieldPoly: modulus must be prime");
  for (auto& c : coeffs_) c %= q_;
  canonicalize();
}

void FieldPoly::canonicalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

FieldPoly FieldPoly::monomial(uint32_t modulus, uint32_t degree, uint32_t coeff) {
  std::vector<uint32_t> c(degree + 1, 0);
  c[degree] = coeff;
  return FieldPoly(modulus, std::move(c));
}

FieldPoly FieldPoly::x_pow_minus_one(uint32_t modulus, uint32_t t) {
  if (t == 0) throw std::invalid_argument("x_pow_minus_one: t must be positive");
  std::vector<uint32_t> c(t + 1, 0);
  c[0] = modulus - 1;
  c[t] = 1;
  return FieldPoly(modulus, std::move(c));
}

uint32_t FieldPoly::eval(uint32_t x) const {
  uint64_t acc = 0;
  for (size_t i = coeffs_.size(); i-- > 0;) acc = (acc * x + coeffs_[i]) % q_;
  return (uint32_t)acc;
}

FieldPoly FieldPoly::monic() const {
  if (is_zero()) return *this;
  uint32_t lead = coeffs_.back();
  if (lead == 1) return *this;
  uint64_t inv = inv_mod(lead, q_);
  FieldPoly out(*this);
  for (auto& c : out.coeffs_) c = (uint32_t)(c * inv % q_);
  return out;
}

FieldPoly& FieldPoly::operator+=(const FieldPoly& rhs) {
  if (q_ != rhs.q_) throw std::invalid_argument("FieldPoly: modulus mismatch");
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), 0);
  for (size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] = (coeffs_[i] + rhs.coeffs_[i]) % q_;
  canonicalize();
  return *this;
}

FieldPoly& FieldPoly::operator-=(const FieldPoly& rhs) {
  if (q_ != rhs.q_) throw std::invalid_argument("FieldPoly: modulus mismatch");
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), 0);
  for (size_t i = 0; i < rhs.coeffs_.size(); ++i) {
    coeffs_[i] = (coeffs_[i] + q_ - rhs.coeffs_[i]) % q_;
  }
  canonicalize();
  return *this;
}

FieldPoly operator*(const FieldPoly& a, const FieldPoly& b) {
  if (a.q_ != b.q_) throw std::invalid_argument("FieldPoly: modulus mismatch");
  if (a.is_zero() || b.is_zero()) return FieldPoly(a.q_);
  std::vector<uint64_t> acc(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  const uint64_t q = a.q_;
  for (size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (size_t j = 0; j < b.coeffs_.size(); ++j) {
      acc[i + j] = (acc[i + j] + (uint64_t)a.coeffs_[i] * b.coeffs_[j]) % q;
    }
  }
  std::vector<uint32_t> out(acc.begin(), acc.end());
  return FieldPoly(a.q_, std::move(out));
}

std::pair<FieldPoly, FieldPoly> poly_divmod(const FieldPoly& f, const FieldPoly& d) {
  if (d.is_zero()) throw std::invalid_argument("poly_divmod: division by zero");
  if (f.modulus() != d.modulus()) throw std::invalid_argument("poly_divmod: modulus mismatch");
  const uint32_t q = f.modulus();
  std::vector<uint32_t> rem = f.coeffs();
  int df = f.degree(), dd = d.degree();
  if (df < dd) return {FieldPoly(q), f};
  std::vector<uint32_t> quot(df - dd + 1, 0);
  uint64_t lead_inv = inv_mod(d.coeffs().back(), q);
  for (int i = df; i >= dd; --i) {
    uint32_t c = rem[i];
    if (c == 0) continue;
    uint32_t factor = (uint32_t)(c * lead_inv % q);
    quot[i - dd] = factor;
    for (int j = 0; j <= dd; ++j) {
      rem[i - dd + j] =
          (uint32_t)((rem[i - dd + j] + (uint64_t)(q - d.coeffs()[j]) * factor) % q);
    }
  }
  return {FieldPoly(q, std::move(quot)), FieldPoly(q, std::move(rem))};
}

FieldPoly poly_mod(const FieldPoly& f, const FieldPoly& d) { return poly_divmod(f, d).second; }

FieldPoly poly_gcd(const FieldPoly& a, const FieldPoly& b) {
  if (a.is_zero() && b.is_zero()) throw std::invalid_argument("poly_gcd: both inputs zero");
  if (a.modulus() != b.modulus()) throw std::invalid_argument("poly_gcd: modulus mismatch");
  if (a.modulus() == 2) return from_gf2(gf2_gcd(to_gf2(a), to_gf2(b)));
  FieldPoly x = a, y = b;
  while (!y.is_zero()) {
    FieldPoly r = poly_mod(x, y);
    x = y;
    y = r;
  }
  return x.monic();
}

bool divides(const FieldPoly& d, const FieldPoly& f) {
  if (d.is_zero()) throw std::invalid_argument("divides: divisor must be nonzero");
  if (d.modulus() == 2) return gf2_divides(to_gf2(d), to_gf2(f));
  return poly_mod(f, d).is_zero();
}

uint32_t binom_mod(uint64_t n, uint64_t k, uint32_t q) {
  if (k > n) return 0;
  uint64_t out = 1;
  while (k > 0 || n > 0) {
    uint64_t nd = n % q, kd = k % q;
    if (kd > nd) return 0;
    // C(nd, kd) for digits < q via the multiplicative formula
    uint64_t c = 1;
    for (uint64_t i = 0; i < kd; ++i) {
      c = c * ((nd - i) % q) % q;
      c = c * inv_mod((i + 1) % q, q) % q;
    }
    out = out * c % q;
    n /= q;
    k /= q;
  }
  return (uint32_t)out;
}

FieldPoly hasse_derivative(const FieldPoly& f, uint32_t j) {
  if (j == 0) return f;
  const uint32_t q = f.modulus();
  if (f.degree() < (int)j) return FieldPoly(q);
  std::vector<uint32_t> out(f.degree() - j + 1, 0);
  for (size_t n = j; n < f.coeffs().size(); ++n) {
    out[n - j] = (uint32_t)((uint64_t)binom_mod(n, j, q) * f.coeffs()[n] % q);
  }
  return FieldPoly(q, std::move(out));
}

uint32_t multiplicity_at_one(const FieldPoly& f) {
  if (f.is_zero()) throw std::invalid_argument("multiplicity_at_one: zero polynomial");
  const uint32_t q = f.modulus();
  for (uint32_t j = 0;; ++j) {
    // value of the j-th Hasse derivative at 1 without building it
    uint64_t acc = 0;
    for (size_t n = j; n < f.coeffs().size(); ++n) {
      acc = (acc + (uint64_t)binom_mod(n, j, q) * f.coeffs()[n]) % q;
    }
    if (acc != 0) return j;
  }
}

uint32_t multiplicity_at_one_by_division(const FieldPoly& f) {
  if (f.is_zero()) throw std::invalid_argument("multiplicity_at_one: zero polynomial");
  const uint32_t q = f.modulus();
  std::vector<uint32_t> cur = f.coeffs();
  uint32_t count = 0;
  while (true) {
    // synthetic division by (X - 1): remainder is the value at 1
    std::vector<uint32_t> quot(cur.size() - 1, 0);
    uint64_t carry = 0;
    for (size_t i = cur.size(); i-- > 1;) {
      carry = (carry + cur[i]) % q;
      quot[i - 1] = (uint32_t)carry;
    }
    uint64_t rem = (carry + cur[0]) % q;
    if (rem != 0) return count;
    ++count;
    cur = std::move(quot);
    if (cur.empty()) return count;  // unreachable for nonzero f, kept for safety
  }
}

CyclotomicFactorizationF2 cyclotomic_factorization_f2(uint32_t p) {
  if (!is_odd_prime(p)) throw std::invalid_argument("p must be an odd prime");
  CyclotomicFactorizationF2 out{p, FieldPoly(2), FieldPoly(2), FieldPoly(2), false, false};
  out.x_plus_one = FieldPoly(2, {1, 1});
  out.unit_sum = FieldPoly(2, std::vector<uint32_t>(p, 1));
  std::vector<uint32_t> comb((uint64_t)(p - 1) * p + 1, 0);
  for (uint32_t l = 0; l < p; ++l) comb[(uint64_t)l * p] = 1;
  out.comb = FieldPoly(2, std::move(comb));
  out.unit_sum_irreducible = is_primitive_root(2, p);
  out.comb_irreducible = is_primitive_root(2, (uint64_t)p * p);
  return out;
}

FieldPoly generating_poly(const PeriodicSequence& seq) {
  return FieldPoly(seq.alphabet_modulus, seq.symbols);
}

GF2Poly to_gf2(const FieldPoly& f) {
  if (f.modulus() != 2) throw std::invalid_argument("to_gf2: modulus must be 2");
  return GF2Poly::from_coeff_bits(f.coeffs());
}

FieldPoly from_gf2(const GF2Poly& f) { return FieldPoly(2, f.coeff_bits()); }

}  // namespace pqseq
