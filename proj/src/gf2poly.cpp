#include "pqseq/gf2poly.hpp"

#include <bit>
#include <stdexcept>

namespace pqseq {

void GF2Poly::trim() {
  while (!words_.empty() && words_.back() == 0) words_.pop_back();
}

GF2Poly GF2Poly::monomial(uint32_t degree) {
  GF2Poly out;
  out.words_.assign(degree / 64 + 1, 0);
  out.words_[degree / 64] = 1ULL << (degree % 64);
  return out;
}

GF2Poly GF2Poly::x_pow_plus_one(uint32_t t) {
  GF2Poly out = monomial(t);
  out.words_[0] ^= 1;
  out.trim();
  return out;
}

GF2Poly GF2Poly::from_coeff_bits(const std::vector<uint32_t>& coeffs) {
  GF2Poly out;
  out.words_.assign(coeffs.size() / 64 + 1, 0);
  for (size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] & 1) out.words_[i / 64] |= 1ULL << (i % 64);
  }
  out.trim();
  return out;
}

int GF2Poly::degree() const {
  if (words_.empty()) return -1;
  return (int)(words_.size() - 1) * 64 + 63 - std::countl_zero(words_.back());
}

bool GF2Poly::bit(uint32_t i) const {
  size_t wi = i / 64;
  return wi < words_.size() && ((words_[wi] >> (i % 64)) & 1);
}

void GF2Poly::set_bit(uint32_t i) {
  size_t wi = i / 64;
  if (wi >= words_.size()) words_.resize(wi + 1, 0);
  words_[wi] |= 1ULL << (i % 64);
}

void GF2Poly::flip_bit(uint32_t i) {
  size_t wi = i / 64;
  if (wi >= words_.size()) words_.resize(wi + 1, 0);
  words_[wi] ^= 1ULL << (i % 64);
  trim();
}

std::vector<uint32_t> GF2Poly::coeff_bits() const {
  int d = degree();
  std::vector<uint32_t> out(d + 1, 0);
  for (int i = 0; i <= d; ++i) out[i] = bit((uint32_t)i) ? 1 : 0;
  return out;
}

GF2Poly& GF2Poly::operator^=(const GF2Poly& rhs) {
  if (rhs.words_.size() > words_.size()) words_.resize(rhs.words_.size(), 0);
  for (size_t i = 0; i < rhs.words_.size(); ++i) words_[i] ^= rhs.words_[i];
  trim();
  return *this;
}

GF2Poly GF2Poly::shifted_left(uint32_t bits) const {
  if (is_zero()) return {};
  uint32_t word_shift = bits / 64, bit_shift = bits % 64;
  GF2Poly out;
  out.words_.assign(words_.size() + word_shift + 1, 0);
  for (size_t i = 0; i < words_.size(); ++i) {
    out.words_[i + word_shift] |= words_[i] << bit_shift;
    if (bit_shift) out.words_[i + word_shift + 1] |= words_[i] >> (64 - bit_shift);
  }
  out.trim();
  return out;
}

GF2Poly GF2Poly::mul(const GF2Poly& rhs) const {
  if (is_zero() || rhs.is_zero()) return {};
  GF2Poly out;
  out.words_.assign(words_.size() + rhs.words_.size(), 0);
  int d = rhs.degree();
  for (int i = 0; i <= d; ++i) {
    if (rhs.bit((uint32_t)i)) out ^= shifted_left((uint32_t)i);
  }
  out.trim();
  return out;
}

void GF2Poly::mod_by(const GF2Poly& divisor) {
  if (divisor.is_zero()) throw std::invalid_argument("GF2Poly: division by zero");
  int dd = divisor.degree();
  int d = degree();
  while (d >= dd) {
    *this ^= divisor.shifted_left((uint32_t)(d - dd));
    d = degree();
  }
}

GF2Poly gf2_gcd(GF2Poly a, GF2Poly b) {
  while (!b.is_zero()) {
    a.mod_by(b);
    std::swap(a, b);
  }
  return a;
}

bool gf2_divides(const GF2Poly& d, const GF2Poly& f) {
  if (d.is_zero()) throw std::invalid_argument("GF2Poly: divisor must be nonzero");
  GF2Poly r = f;
  r.mod_by(d);
  return r.is_zero();
}

}  // namespace pqseq
