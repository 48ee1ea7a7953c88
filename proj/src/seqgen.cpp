#include "pqseq/seqgen.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace pqseq {

namespace {

std::vector<uint32_t> normalized_index_set(const PrimeParams& params,
                                           const std::vector<uint32_t>& index_set) {
  if (index_set.empty()) throw std::invalid_argument("index set must be nonempty");
  std::set<uint32_t> uniq(index_set.begin(), index_set.end());
  if (*uniq.rbegin() >= params.p) {
    throw std::invalid_argument("index set entries must lie in [0, p)");
  }
  return {uniq.begin(), uniq.end()};
}

std::string set_label(const char* kind, const std::vector<uint32_t>& s) {
  std::string out = kind;
  out += '{';
  for (size_t i = 0; i < s.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(s[i]);
  }
  out += '}';
  return out;
}

template <typename Pred>
PeriodicSequence build_binary(const PrimeParams& params, std::string label, Pred&& one_at) {
  uint64_t p2 = (uint64_t)params.p * params.p;
  std::vector<uint32_t> symbols(p2);
  for (uint64_t u = 0; u < p2; ++u) symbols[u] = one_at(u) ? 1 : 0;
  return PeriodicSequence(2, std::move(symbols), std::move(label));
}

}  // namespace

PeriodicSequence::PeriodicSequence(uint32_t modulus, std::vector<uint32_t> syms, std::string lab)
    : period((uint32_t)syms.size()), alphabet_modulus(modulus), symbols(std::move(syms)),
      label(std::move(lab)) {
  if (period == 0) throw std::invalid_argument("sequence must have positive period");
  if (modulus < 2) throw std::invalid_argument("alphabet modulus must be >= 2");
  for (uint32_t s : symbols) {
    if (s >= modulus) throw std::invalid_argument("symbol out of alphabet range");
  }
}

uint32_t PeriodicSequence::weight() const {
  return (uint32_t)std::count_if(symbols.begin(), symbols.end(), [](uint32_t s) { return s != 0; });
}

bool PeriodicSequence::is_zero() const { return weight() == 0; }

uint32_t PeriodicSequence::least_period() const {
  for (uint32_t d = 1; d < period; ++d) {
    if (period % d != 0) continue;
    bool ok = true;
    for (uint32_t u = 0; u + d < period && ok; ++u) ok = symbols[u] == symbols[u + d];
    if (ok) return d;
  }
  return period;
}

PeriodicSequence PeriodicSequence::over_modulus(uint32_t q) const {
  PeriodicSequence out(*this);
  if (q < alphabet_modulus) {
    for (uint32_t s : symbols) {
      if (s >= q) throw std::invalid_argument("symbols do not fit the requested alphabet");
    }
  }
  out.alphabet_modulus = q;
  return out;
}

PeriodicSequence gen_threshold(const PrimeParams& params) {
  const uint32_t half = (params.p + 1) / 2;
  return build_binary(params, "threshold", [&](uint64_t u) {
    return poly_quotient(params.p, params.w, u) >= half;
  });
}

PeriodicSequence gen_legendre(const PrimeParams& params) {
  return build_binary(params, "legendre", [&](uint64_t u) {
    uint32_t q = poly_quotient(params.p, params.w, u);
    return q != 0 && legendre(q, params.p) == -1;
  });
}

PeriodicSequence gen_indicator(const PrimeParams& params, const std::vector<uint32_t>& index_set) {
  auto idx = normalized_index_set(params, index_set);
  std::vector<bool> in_set(params.p, false);
  for (uint32_t l : idx) in_set[l] = true;
  const bool w1 = params.w == 1;
  return build_binary(params, set_label("indicator", idx), [&](uint64_t u) {
    // for w >= 2 the quotient vanishes on all of P, so multiples of p
    // must be excluded explicitly when 0 is in the index set
    if (!w1 && u % params.p == 0) return false;
    return (bool)in_set[poly_quotient(params.p, params.w, u)];
  });
}

PeriodicSequence gen_complement(const PrimeParams& params, const std::vector<uint32_t>& index_set) {
  if (params.w < 2) {
    throw std::invalid_argument("complement construction requires w >= 2");
  }
  auto idx = normalized_index_set(params, index_set);
  if (idx.size() > (params.p - 1) / 2) {
    throw std::invalid_argument("complement index set must have size <= (p-1)/2");
  }
  std::vector<bool> in_set(params.p, false);
  for (uint32_t l : idx) in_set[l] = true;
  return build_binary(params, set_label("complement", idx), [&](uint64_t u) {
    if (u % params.p == 0) return true;
    return (bool)in_set[poly_quotient(params.p, params.w, u)];
  });
}

std::vector<uint32_t> quotient_zero_positions(const PrimeParams& params) {
  std::vector<uint32_t> out;
  uint64_t p2 = (uint64_t)params.p * params.p;
  for (uint64_t u = 0; u < p2; ++u) {
    if (poly_quotient(params.p, params.w, u) == 0) out.push_back((uint32_t)u);
  }
  return out;
}

PeriodicSequence substituted(const PeriodicSequence& seq, const std::vector<uint32_t>& positions,
                             uint32_t value) {
  if (value >= seq.alphabet_modulus) {
    throw std::invalid_argument("substituted value out of alphabet range");
  }
  PeriodicSequence out(seq);
  for (uint32_t pos : positions) {
    if (pos >= seq.period) throw std::invalid_argument("substitution position out of range");
    out.symbols[pos] = value;
  }
  out.label = seq.label + "+subst";
  return out;
}

}  // namespace pqseq
