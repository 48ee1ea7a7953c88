#pragma once

#include <cstdint>
#include <vector>

namespace pqseq {

/// Dense polynomial over F_2 with coefficients packed 64 per word.
/// Bit i of the word array is the coefficient of X^i.
class GF2Poly {
 public:
  GF2Poly() = default;
  explicit GF2Poly(std::vector<uint64_t> words) : words_(std::move(words)) { trim(); }

  static GF2Poly zero() { return {}; }
  static GF2Poly one() { return monomial(0); }
  static GF2Poly monomial(uint32_t degree);
  static GF2Poly x_pow_plus_one(uint32_t t);  // X^t + 1
  static GF2Poly from_coeff_bits(const std::vector<uint32_t>& coeffs);  // entries 0/1

  bool is_zero() const { return words_.empty(); }
  int degree() const;  // -1 for the zero polynomial
  bool bit(uint32_t i) const;
  void set_bit(uint32_t i);
  void flip_bit(uint32_t i);
  std::vector<uint32_t> coeff_bits() const;

  GF2Poly& operator^=(const GF2Poly& rhs);
  friend GF2Poly operator^(GF2Poly a, const GF2Poly& b) { return a ^= b; }
  friend bool operator==(const GF2Poly& a, const GF2Poly& b) { return a.words_ == b.words_; }

  GF2Poly shifted_left(uint32_t bits) const;
  GF2Poly mul(const GF2Poly& rhs) const;

  /// In-place remainder by a nonzero divisor.
  void mod_by(const GF2Poly& divisor);

  const std::vector<uint64_t>& words() const { return words_; }

 private:
  void trim();
  std::vector<uint64_t> words_;
};

GF2Poly gf2_gcd(GF2Poly a, GF2Poly b);
bool gf2_divides(const GF2Poly& d, const GF2Poly& f);

}  // namespace pqseq
