#include "pqseq/lincomp.hpp"

#include <cmath>
#include <stdexcept>

#include "pqseq/errors.hpp"
#include "pqseq/quotients.hpp"

namespace pqseq {

namespace {

void require_square_period(const PeriodicSequence& seq, uint32_t p, const char* what) {
  if ((uint64_t)p * p != seq.period) {
    throw StructureError(std::string(what) + ": period must be p^2 for p = " + std::to_string(p));
  }
}

}  // namespace

uint32_t lc_gcd(const PeriodicSequence& seq) {
  FieldPoly s = generating_poly(seq);
  if (s.is_zero()) return 0;
  FieldPoly cycle = FieldPoly::x_pow_minus_one(seq.alphabet_modulus, seq.period);
  FieldPoly g = poly_gcd(cycle, s);
  return seq.period - (uint32_t)g.degree();
}

uint32_t lc_berlekamp_massey(const PeriodicSequence& seq) {
  const uint32_t q = seq.alphabet_modulus;
  const uint32_t t = seq.period;
  const uint32_t n_total = 2 * t;
  auto sym = [&](uint32_t n) { return seq.symbols[n % t]; };

  std::vector<uint32_t> c{1}, b{1};
  uint32_t len = 0, m = 1;
  uint32_t last_disc = 1;
  for (uint32_t n = 0; n < n_total; ++n) {
    uint64_t d = sym(n);
    for (uint32_t i = 1; i <= len && i < c.size(); ++i) {
      d += (uint64_t)c[i] * sym(n - i);
    }
    d %= q;
    if (d == 0) {
      ++m;
      continue;
    }
    uint64_t coef = d * inv_mod(last_disc, q) % q;
    if (2 * len <= n) {
      std::vector<uint32_t> prev = c;
      if (c.size() < b.size() + m) c.resize(b.size() + m, 0);
      for (size_t i = 0; i < b.size(); ++i) {
        c[i + m] = (uint32_t)((c[i + m] + coef * (q - b[i])) % q);
      }
      len = n + 1 - len;
      b = std::move(prev);
      last_disc = (uint32_t)d;
      m = 1;
    } else {
      if (c.size() < b.size() + m) c.resize(b.size() + m, 0);
      for (size_t i = 0; i < b.size(); ++i) {
        c[i + m] = (uint32_t)((c[i + m] + coef * (q - b[i])) % q);
      }
      ++m;
    }
  }
  return len;
}

uint32_t lc_f2_structured(const PeriodicSequence& seq, const CyclotomicFactorizationF2& fact) {
  if (seq.alphabet_modulus != 2) {
    throw std::invalid_argument("lc_f2_structured: sequence must be over F_2");
  }
  require_square_period(seq, fact.p, "lc_f2_structured");
  if (!fact.unit_sum_irreducible || !fact.comb_irreducible) {
    throw StructureError("lc_f2_structured: cyclotomic factors not irreducible for p = " +
                         std::to_string(fact.p));
  }
  GF2Poly s = GF2Poly::from_coeff_bits(seq.symbols);
  if (s.is_zero()) return 0;
  const uint32_t p = fact.p;
  uint32_t lc = seq.period;
  if (gf2_divides(to_gf2(fact.x_plus_one), s)) lc -= 1;
  if (gf2_divides(to_gf2(fact.unit_sum), s)) lc -= p - 1;
  if (gf2_divides(to_gf2(fact.comb), s)) lc -= seq.period - p;
  return lc;
}

uint32_t lc_fp_multiplicity(const PeriodicSequence& seq) {
  const uint32_t p = seq.alphabet_modulus;
  if (!is_odd_prime(p)) {
    throw std::invalid_argument("lc_fp_multiplicity: alphabet must be an odd prime");
  }
  require_square_period(seq, p, "lc_fp_multiplicity");
  FieldPoly s = generating_poly(seq);
  if (s.is_zero()) return 0;
  return seq.period - multiplicity_at_one(s);
}

uint32_t BivariatePoly::eval(uint32_t x0, uint32_t x1) const {
  uint64_t acc = 0;
  for (uint32_t i = p; i-- > 0;) {
    uint64_t row = 0;
    for (uint32_t j = p; j-- > 0;) row = (row * x1 + coeff(i, j)) % p;
    acc = (acc * x0 + row) % p;
  }
  return (uint32_t)acc;
}

bool BivariatePoly::is_zero() const {
  for (uint32_t c : coeffs) {
    if (c != 0) return false;
  }
  return true;
}

int BivariatePoly::degree_x1() const {
  int best = -1;
  for (uint32_t i = 0; i < p; ++i) {
    for (uint32_t j = 0; j < p; ++j) {
      if (coeff(i, j) != 0 && (int)j > best) best = (int)j;
    }
  }
  return best;
}

int BivariatePoly::weighted_degree() const {
  int best = -1;
  for (uint32_t i = 0; i < p; ++i) {
    for (uint32_t j = 0; j < p; ++j) {
      if (coeff(i, j) != 0) best = std::max(best, (int)(i + p * j));
    }
  }
  return best;
}

namespace {

// coefficients of the degree < p polynomial through (i, values[i]), i in [0, p)
std::vector<uint32_t> lagrange_coeffs(uint32_t p, const std::vector<uint32_t>& values) {
  // master(X) = prod_{j} (X - j)
  std::vector<uint32_t> master(p + 1, 0);
  master[0] = 1;
  for (uint32_t j = 0; j < p; ++j) {
    for (uint32_t d = p + 1; d-- > 0;) {
      uint64_t shifted = (d > 0) ? master[d - 1] : 0;
      master[d] = (uint32_t)((shifted + (uint64_t)((p - j) % p) * master[d]) % p);
    }
  }
  std::vector<uint32_t> out(p, 0);
  std::vector<uint32_t> basis(p, 0);
  for (uint32_t i = 0; i < p; ++i) {
    if (values[i] == 0) continue;
    // basis_i = master / (X - i), by synthetic division
    uint64_t carry = 0;
    for (uint32_t d = p; d-- > 0;) {
      carry = (carry * i + master[d + 1]) % p;
      basis[d] = (uint32_t)carry;
    }
    uint64_t denom = 1;
    for (uint32_t j = 0; j < p; ++j) {
      if (j != i) denom = denom * ((i + p - j) % p) % p;
    }
    uint64_t scale = (uint64_t)values[i] * inv_mod(denom, p) % p;
    for (uint32_t d = 0; d < p; ++d) {
      out[d] = (uint32_t)((out[d] + scale * basis[d]) % p);
    }
  }
  return out;
}

}  // namespace

BivariatePoly seq_to_bivariate(const PeriodicSequence& seq) {
  const uint32_t p = seq.alphabet_modulus;
  if (!is_odd_prime(p)) {
    throw std::invalid_argument("seq_to_bivariate: alphabet must be an odd prime");
  }
  require_square_period(seq, p, "seq_to_bivariate");

  // stage one: for each row i1 interpolate g_{i1}(X0) with g_{i1}(i0) = s_{i0 + i1 p}
  std::vector<std::vector<uint32_t>> rows(p);
  std::vector<uint32_t> values(p);
  for (uint32_t i1 = 0; i1 < p; ++i1) {
    for (uint32_t i0 = 0; i0 < p; ++i0) values[i0] = seq.symbols[i0 + i1 * p];
    rows[i1] = lagrange_coeffs(p, values);
  }
  // stage two: interpolate each X0-coefficient as a polynomial in X1
  BivariatePoly out{p, std::vector<uint32_t>((size_t)p * p, 0), };
  for (uint32_t a = 0; a < p; ++a) {
    for (uint32_t i1 = 0; i1 < p; ++i1) values[i1] = rows[i1][a];
    std::vector<uint32_t> col = lagrange_coeffs(p, values);
    for (uint32_t b = 0; b < p; ++b) out.coeffs[a * p + b] = col[b];
  }
  return out;
}

uint32_t lc_bivariate(const PeriodicSequence& seq) {
  const uint32_t p = seq.alphabet_modulus;
  if (!is_odd_prime(p)) {
    throw std::invalid_argument("lc_bivariate: alphabet must be an odd prime");
  }
  require_square_period(seq, p, "lc_bivariate");
  if (seq.least_period() != seq.period) {
    throw StructureError("lc_bivariate: least period divides p, use lc_gcd instead");
  }
  BivariatePoly rho = seq_to_bivariate(seq);
  return (uint32_t)(1 + rho.weighted_degree());
}

}  // namespace pqseq
