#include "pqseq/kerror.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "pqseq/errors.hpp"

namespace pqseq {

const char* method_name(Method m) {
  switch (m) {
    case Method::exhaustive: return "exhaustive";
    case Method::closed_form: return "closed_form";
    case Method::lower_bound: return "lower_bound";
    case Method::upper_bound: return "upper_bound";
  }
  return "?";
}

const char* variant_name(Variant v) {
  switch (v) {
    case Variant::thm1: return "thm1";
    case Variant::thm2: return "thm2";
    case Variant::thm3_bound: return "thm3_bound";
    case Variant::complement: return "complement";
    case Variant::corollary: return "corollary";
    case Variant::thm4: return "thm4";
    case Variant::thm5: return "thm5";
    case Variant::fp_upper_legendre: return "fp_upper_legendre";
    case Variant::fp_lower: return "fp_lower";
  }
  return "?";
}

std::optional<Variant> variant_from_name(const std::string& name) {
  for (Variant v : {Variant::thm1, Variant::thm2, Variant::thm3_bound, Variant::complement,
                    Variant::corollary, Variant::thm4, Variant::thm5, Variant::fp_upper_legendre,
                    Variant::fp_lower}) {
    if (name == variant_name(v)) return v;
  }
  return std::nullopt;
}

const char* verify_status_name(VerifyStatus s) {
  switch (s) {
    case VerifyStatus::match: return "match";
    case VerifyStatus::bound_ok: return "bound_ok";
    case VerifyStatus::mismatch: return "mismatch";
    case VerifyStatus::bound_violated: return "bound_violated";
    case VerifyStatus::no_claim: return "no_claim";
  }
  return "?";
}

uint64_t pattern_count(uint32_t period, uint32_t q, uint32_t k) {
  k = std::min(k, period);
  unsigned __int128 total = 0;
  unsigned __int128 term = 1;  // C(period, i) (q-1)^i
  constexpr unsigned __int128 kCap = (unsigned __int128)UINT64_MAX;
  for (uint32_t i = 0;; ++i) {
    total += term;
    if (total > kCap) return UINT64_MAX;
    if (i == k) break;
    term = term * (period - i) / (i + 1) * (q - 1);
    if (term > kCap) return UINT64_MAX;
  }
  return (uint64_t)total;
}

namespace {

constexpr uint32_t kMaxPackedBits = 511;
constexpr size_t kWords = 8;
using Words = std::array<uint64_t, kWords>;

int packed_degree(const Words& a) {
  for (size_t i = kWords; i-- > 0;) {
    if (a[i]) return (int)(i * 64 + 63 - std::countl_zero(a[i]));
  }
  return -1;
}

// a ^= b << shift
void packed_xor_shifted(Words& a, const Words& b, uint32_t shift) {
  uint32_t ws = shift / 64, bs = shift % 64;
  if (bs == 0) {
    for (size_t i = 0; i + ws < kWords; ++i) a[i + ws] ^= b[i];
  } else {
    uint64_t carry = 0;
    for (size_t i = 0; i + ws < kWords; ++i) {
      a[i + ws] ^= (b[i] << bs) | carry;
      carry = b[i] >> (64 - bs);
    }
  }
}

uint32_t packed_gcd_degree(Words a, Words b) {
  int da = packed_degree(a), db = packed_degree(b);
  while (db >= 0) {
    while (da >= db) {
      packed_xor_shifted(a, b, (uint32_t)(da - db));
      da = packed_degree(a);
    }
    std::swap(a, b);
    std::swap(da, db);
  }
  return (uint32_t)da;
}

uint32_t isqrt_u32(uint32_t n) {
  uint32_t r = (uint32_t)std::lround(std::sqrt((double)n));
  while (r > 0 && r * r > n) --r;
  while ((uint64_t)(r + 1) * (r + 1) <= n) ++r;
  return r;
}

unsigned resolve_threads(unsigned requested) {
  if (requested) return requested;
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

// Runs fn(task) for every task index, possibly on several threads, and
// merges the returned minima.  fn must not touch shared mutable state.
template <typename Fn>
uint32_t run_min_tasks(uint32_t task_count, unsigned threads, Fn&& fn) {
  threads = std::min<unsigned>(threads, task_count);
  if (threads <= 1) {
    uint32_t best = UINT32_MAX;
    for (uint32_t t = 0; t < task_count; ++t) best = std::min(best, fn(t));
    return best;
  }
  std::atomic<uint32_t> next{0};
  std::vector<uint32_t> results(threads, UINT32_MAX);
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (unsigned ti = 0; ti < threads; ++ti) {
    pool.emplace_back([&, ti] {
      uint32_t best = UINT32_MAX;
      for (uint32_t t = next.fetch_add(1); t < task_count; t = next.fetch_add(1)) {
        best = std::min(best, fn(t));
      }
      results[ti] = best;
    });
  }
  for (auto& th : pool) th.join();
  uint32_t best = UINT32_MAX;
  for (uint32_t r : results) best = std::min(best, r);
  return best;
}

// ---- packed F_2 search (period <= 511) ----

class F2Search {
 public:
  F2Search(const PeriodicSequence& seq, bool allow_structured) : t_(seq.period) {
    for (uint32_t u = 0; u < t_; ++u) {
      if (seq.symbols[u]) base_[u / 64] |= 1ULL << (u % 64);
    }
    base_weight_ = seq.weight();
    uint32_t p = isqrt_u32(t_);
    if (allow_structured && (uint64_t)p * p == t_ && is_odd_prime(p) &&
        is_primitive_root(2, (uint64_t)p * p)) {
      structured_ = true;
      p_ = p;
    } else {
      xt1_[t_ / 64] |= 1ULL << (t_ % 64);
      xt1_[0] ^= 1;
    }
  }

  bool structured() const { return structured_; }

  struct State {
    Words cur{};
    uint32_t weight = 0;
    uint32_t parity = 0;
    uint32_t qfold = 0;
  };

  State initial_state() const {
    State s;
    s.cur = base_;
    s.weight = base_weight_;
    if (structured_) {
      s.parity = base_weight_ & 1;
      for (uint32_t u = 0; u < t_; ++u) {
        if (base_[u / 64] >> (u % 64) & 1) s.qfold ^= 1u << (u % p_);
      }
    }
    return s;
  }

  void toggle(State& s, uint32_t pos) const {
    uint64_t bit = 1ULL << (pos % 64);
    s.cur[pos / 64] ^= bit;
    s.weight += (s.cur[pos / 64] & bit) ? 1 : (uint32_t)-1;
    if (structured_) {
      s.parity ^= 1;
      s.qfold ^= 1u << (pos % p_);
    }
  }

  uint32_t lc(const State& s) const {
    if (s.weight == 0) return 0;
    if (structured_) {
      uint32_t lc = t_;
      if ((s.parity & 1) == 0) lc -= 1;
      uint32_t qmask = (1u << p_) - 1;
      if (s.qfold == 0 || s.qfold == qmask) lc -= p_ - 1;
      if (comb_divides(s.cur)) lc -= t_ - p_;
      return lc;
    }
    return t_ - packed_gcd_degree(xt1_, s.cur);
  }

  uint32_t period() const { return t_; }

 private:
  // the comb factor divides S exactly when S is invariant under rotation
  // by p within the T = p^2 bit window
  bool comb_divides(const Words& cur) const {
    const uint32_t p = p_;
    const size_t nw = t_ / 64 + 1;  // words holding bits [0, T)
    Words rot{};
    uint64_t carry = 0;
    for (size_t i = 0; i < nw; ++i) {
      rot[i] = (cur[i] << p) | carry;
      carry = cur[i] >> (64 - p);
    }
    if (nw < kWords) rot[nw] = carry;
    // wrap bits [T, T+p) back to [0, p); T = p^2 is odd so off >= 1
    uint32_t wi = t_ / 64, off = t_ % 64;
    uint64_t top = rot[wi] >> off;
    if (off + p > 64 && wi + 1 < kWords) top |= rot[wi + 1] << (64 - off);
    top &= (1ULL << p) - 1;
    rot[wi] &= (1ULL << off) - 1;
    rot[0] |= top;
    for (size_t i = 0; i < nw; ++i) {
      if (rot[i] != cur[i]) return false;
    }
    return true;
  }

  uint32_t t_;
  uint32_t p_ = 0;
  bool structured_ = false;
  Words base_{};
  Words xt1_{};
  uint32_t base_weight_ = 0;
};

// best LC over all patterns of exactly m flips starting at first_pos
uint32_t f2_subtree(const F2Search& search, F2Search::State& state, uint32_t start,
                    uint32_t remaining, std::atomic<bool>& stop) {
  if (remaining == 0) {
    uint32_t v = search.lc(state);
    if (v == 0) stop.store(true, std::memory_order_relaxed);
    return v;
  }
  uint32_t best = UINT32_MAX;
  for (uint32_t pos = start; pos + remaining <= search.period(); ++pos) {
    search.toggle(state, pos);
    best = std::min(best, f2_subtree(search, state, pos + 1, remaining - 1, stop));
    search.toggle(state, pos);
    if (stop.load(std::memory_order_relaxed)) break;
  }
  return best;
}

uint32_t f2_best_for_class(const F2Search& search, uint32_t m, unsigned threads,
                           std::atomic<bool>& stop) {
  if (m == 0) return search.lc(search.initial_state());
  uint32_t task_count = search.period() - m + 1;
  return run_min_tasks(task_count, threads, [&](uint32_t first) {
    if (stop.load(std::memory_order_relaxed)) return UINT32_MAX;
    F2Search::State state = search.initial_state();
    search.toggle(state, first);
    return f2_subtree(search, state, first + 1, m - 1, stop);
  });
}

// ---- F_p search via Hasse derivative values at 1 (period = p^2) ----

class FpSearch {
 public:
  explicit FpSearch(const PeriodicSequence& seq)
      : t_(seq.period), p_(seq.alphabet_modulus), binom_((size_t)t_ * t_, 0), base_(t_, 0) {
    for (uint32_t u = 0; u < t_; ++u) {
      binom_[(size_t)u * t_] = 1;
      for (uint32_t j = 1; j <= u; ++j) {
        binom_[(size_t)u * t_ + j] =
            (uint8_t)((binom_[(size_t)(u - 1) * t_ + j - 1] + binom_[(size_t)(u - 1) * t_ + j]) %
                      p_);
      }
    }
    for (uint32_t j = 0; j < t_; ++j) {
      uint64_t acc = 0;
      for (uint32_t u = j; u < t_; ++u) acc += (uint64_t)binom_[(size_t)u * t_ + j] * seq.symbols[u];
      base_[j] = (uint32_t)(acc % p_);
    }
  }

  uint32_t period() const { return t_; }
  uint32_t modulus() const { return p_; }

  // LC of the base sequence plus errors val[i] * X^{pos[i]}
  uint32_t lc(const uint32_t* pos, const uint32_t* val, uint32_t cnt) const {
    for (uint32_t j = 0; j < t_; ++j) {
      uint32_t v = base_[j];
      for (uint32_t i = 0; i < cnt; ++i) v += binom_[(size_t)pos[i] * t_ + j] * val[i];
      if (v % p_) return t_ - j;
    }
    return 0;
  }

 private:
  uint32_t t_, p_;
  std::vector<uint8_t> binom_;
  std::vector<uint32_t> base_;
};

uint32_t fp_values_at(const FpSearch& search, uint32_t* pos, uint32_t* val, uint32_t cnt,
                      std::atomic<bool>& stop) {
  const uint32_t p = search.modulus();
  for (uint32_t i = 0; i < cnt; ++i) val[i] = 1;
  uint32_t best = UINT32_MAX;
  while (true) {
    uint32_t v = search.lc(pos, val, cnt);
    if (v < best) {
      best = v;
      if (v == 0) {
        stop.store(true, std::memory_order_relaxed);
        return 0;
      }
    }
    uint32_t i = 0;
    while (i < cnt) {
      if (++val[i] == p) {
        val[i] = 1;
        ++i;
      } else {
        break;
      }
    }
    if (i == cnt) return best;
  }
}

uint32_t fp_subtree(const FpSearch& search, uint32_t* pos, uint32_t* val, uint32_t depth,
                    uint32_t start, uint32_t remaining, std::atomic<bool>& stop) {
  if (remaining == 0) return fp_values_at(search, pos, val, depth, stop);
  uint32_t best = UINT32_MAX;
  for (uint32_t c = start; c + remaining <= search.period(); ++c) {
    pos[depth] = c;
    best = std::min(best, fp_subtree(search, pos, val, depth + 1, c + 1, remaining - 1, stop));
    if (stop.load(std::memory_order_relaxed)) break;
  }
  return best;
}

uint32_t fp_best_for_class(const FpSearch& search, uint32_t m, unsigned threads,
                           std::atomic<bool>& stop) {
  if (m == 0) {
    return search.lc(nullptr, nullptr, 0);
  }
  uint32_t task_count = search.period() - m + 1;
  return run_min_tasks(task_count, threads, [&](uint32_t first) -> uint32_t {
    if (stop.load(std::memory_order_relaxed)) return UINT32_MAX;
    std::vector<uint32_t> pos(m), val(m);
    pos[0] = first;
    return fp_subtree(search, pos.data(), val.data(), 1, first + 1, m - 1, stop);
  });
}

// ---- generic fallback for unusual periods or alphabets ----

uint32_t generic_subtree(const PeriodicSequence& base, std::vector<uint32_t>& pos,
                         std::vector<uint32_t>& val, uint32_t depth, uint32_t start,
                         uint32_t remaining, std::atomic<bool>& stop) {
  const uint32_t q = base.alphabet_modulus;
  if (remaining == 0) {
    for (auto& v : val) v = 1;
    uint32_t best = UINT32_MAX;
    while (true) {
      PeriodicSequence mutated = base;
      for (uint32_t i = 0; i < depth; ++i) {
        mutated.symbols[pos[i]] = (mutated.symbols[pos[i]] + val[i]) % q;
      }
      best = std::min(best, lc_gcd(mutated));
      if (best == 0) {
        stop.store(true, std::memory_order_relaxed);
        return 0;
      }
      uint32_t i = 0;
      while (i < depth) {
        if (++val[i] == q) {
          val[i] = 1;
          ++i;
        } else {
          break;
        }
      }
      if (i == depth) return best;
    }
  }
  uint32_t best = UINT32_MAX;
  for (uint32_t c = start; c + remaining <= base.period; ++c) {
    pos[depth] = c;
    best = std::min(best,
                    generic_subtree(base, pos, val, depth + 1, c + 1, remaining - 1, stop));
    if (stop.load(std::memory_order_relaxed)) break;
  }
  return best;
}

// best LC per exact error weight 0..k_max, already prefix-minimized
std::vector<uint32_t> best_by_weight(const PeriodicSequence& seq, uint32_t k_max,
                                     const ExhaustiveOptions& options) {
  const uint32_t t = seq.period;
  const uint32_t q = seq.alphabet_modulus;
  const unsigned threads = resolve_threads(options.threads);
  std::atomic<bool> stop{false};
  std::vector<uint32_t> best(k_max + 1, 0);

  const bool f2_fast = q == 2 && t <= kMaxPackedBits;
  const uint32_t root = isqrt_u32(t);
  const bool fp_fast = !f2_fast && is_odd_prime(q) && q <= 61 && (uint64_t)root * root == t &&
                       root == q;

  if (f2_fast) {
    F2Search search(seq, options.use_structured);
    for (uint32_t m = 0; m <= k_max; ++m) {
      if (stop.load(std::memory_order_relaxed)) break;  // reached the global minimum 0
      best[m] = f2_best_for_class(search, m, threads, stop);
    }
  } else if (fp_fast) {
    FpSearch search(seq);
    for (uint32_t m = 0; m <= k_max; ++m) {
      if (stop.load(std::memory_order_relaxed)) break;
      best[m] = fp_best_for_class(search, m, threads, stop);
    }
  } else {
    std::vector<uint32_t> pos(std::max<uint32_t>(k_max, 1)), val(std::max<uint32_t>(k_max, 1));
    for (uint32_t m = 0; m <= k_max; ++m) {
      if (stop.load(std::memory_order_relaxed)) break;
      best[m] = m == 0 ? lc_gcd(seq) : generic_subtree(seq, pos, val, 0, 0, m, stop);
    }
  }

  // a worker may have aborted mid-class after the zero was found; the
  // prefix minimum repairs every later entry
  for (uint32_t m = 1; m <= k_max; ++m) best[m] = std::min(best[m], best[m - 1]);
  return best;
}

}  // namespace

uint32_t klc_exhaustive(const PeriodicSequence& seq, uint32_t k, const ExhaustiveOptions& options) {
  k = std::min(k, seq.period);
  uint64_t required = pattern_count(seq.period, seq.alphabet_modulus, k);
  if (required > options.budget) throw BudgetError(required, options.budget);
  return best_by_weight(seq, k, options)[k];
}

Spectrum spectrum(const PeriodicSequence& seq, uint32_t k_max, const ExhaustiveOptions& options) {
  k_max = std::min(k_max, seq.period);
  Spectrum out;
  out.k_requested = k_max;
  out.required_patterns = pattern_count(seq.period, seq.alphabet_modulus, k_max);
  uint32_t feasible = k_max;
  while (pattern_count(seq.period, seq.alphabet_modulus, feasible) > options.budget) {
    if (feasible == 0) {
      out.truncated = true;
      return out;
    }
    --feasible;
  }
  out.truncated = feasible < k_max;
  std::vector<uint32_t> best = best_by_weight(seq, feasible, options);
  for (uint32_t k = 0; k <= feasible; ++k) {
    out.points.push_back({k, best[k], Method::exhaustive});
  }
  return out;
}

namespace {

void require_hypothesis(bool ok, const std::string& what) {
  if (!ok) throw PreconditionError("hypothesis failed: " + what);
}

std::vector<uint32_t> normalized_set(const TheoremSpec& spec, bool required) {
  std::vector<uint32_t> s = spec.index_set;
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  if (required && s.empty()) throw PreconditionError("hypothesis failed: index set is empty");
  for (uint32_t l : s) {
    if (l >= spec.params.p) {
      throw PreconditionError("hypothesis failed: index set entry out of [0, p)");
    }
  }
  return s;
}

}  // namespace

SpectrumPoint klc_theorem(const TheoremSpec& spec, uint32_t k) {
  const PrimeParams& pp = spec.params;
  const uint64_t p = pp.p;
  const uint64_t p2 = p * p;
  const bool needs_set = spec.variant != Variant::corollary &&
                         spec.variant != Variant::fp_upper_legendre;
  const uint64_t s = normalized_set(spec, needs_set).size();
  const uint64_t half = (p - 1) / 2;

  switch (spec.variant) {
    case Variant::thm1: {
      require_hypothesis(spec.field == Field::f2, "field must be F_2");
      require_hypothesis(pp.w >= 2, "w must be >= 2");
      require_hypothesis(pp.two_primitive, "2 is not a primitive root mod p^2");
      require_hypothesis(s <= half, "index set size must be <= (p-1)/2");
      uint64_t limit = (p - 1) * s;
      if (k >= limit) return {k, 0, Method::closed_form};
      if (s % 2 == 1) {
        if (k == 0) return {k, (uint32_t)(p2 - 1), Method::closed_form};
        if (k < p - 1) return {k, (uint32_t)(p2 - p + 1), Method::closed_form};
        return {k, (uint32_t)(p2 - p), Method::closed_form};
      }
      return {k, (uint32_t)(p2 - p), Method::closed_form};
    }
    case Variant::thm2: {
      require_hypothesis(spec.field == Field::f2, "field must be F_2");
      require_hypothesis(pp.w == 1, "w must be 1");
      require_hypothesis(pp.two_primitive, "2 is not a primitive root mod p^2");
      require_hypothesis(s <= half, "index set size must be <= (p-1)/2");
      uint64_t limit = p * s;
      if (k >= limit) return {k, 0, Method::closed_form};
      if (s % 2 == 1) {
        if (k < p) return {k, (uint32_t)(p2 - p + 1), Method::closed_form};
        return {k, (uint32_t)(p2 - p), Method::closed_form};
      }
      return {k, (uint32_t)(p2 - p), Method::closed_form};
    }
    case Variant::thm3_bound: {
      require_hypothesis(spec.field == Field::f2, "field must be F_2");
      require_hypothesis(pp.lambda.has_value(),
                         "order of 2 mod p^2 is not a multiple of p (Wieferich case)");
      require_hypothesis(*pp.lambda > 1 && *pp.lambda <= p - 1, "lambda out of range");
      require_hypothesis(s <= half, "index set size must be <= (p-1)/2");
      uint64_t limit = pp.w >= 2 ? (p - 1) * s : p * s;
      if (k < limit) return {k, (uint32_t)(*pp.lambda * p), Method::lower_bound};
      return {k, 0, Method::closed_form};
    }
    case Variant::complement: {
      require_hypothesis(spec.field == Field::f2, "field must be F_2");
      require_hypothesis(pp.w >= 2, "w must be >= 2");
      require_hypothesis(pp.two_primitive, "2 is not a primitive root mod p^2");
      require_hypothesis(s <= half, "index set size must be <= (p-1)/2");
      uint64_t limit = (p - 1) * s;
      if (k == limit) return {k, (uint32_t)p, Method::closed_form};
      if (k > limit) return {k, 0, Method::closed_form};
      if (s % 2 == 1) {
        if (k < p - 1) return {k, (uint32_t)(p2 - p + 1), Method::closed_form};
        return {k, (uint32_t)(p2 - p), Method::closed_form};
      }
      if (k == 0) return {k, (uint32_t)p2, Method::closed_form};
      return {k, (uint32_t)(p2 - p), Method::closed_form};
    }
    case Variant::corollary: {
      require_hypothesis(spec.field == Field::f2, "field must be F_2");
      require_hypothesis(pp.w >= 2, "w must be >= 2");
      require_hypothesis(pp.two_primitive, "2 is not a primitive root mod p^2");
      uint64_t limit = (p - 1) * (p - 1) / 2;
      if (k >= limit) return {k, 0, Method::closed_form};
      if (p % 4 == 3) {
        if (k == 0) return {k, (uint32_t)(p2 - 1), Method::closed_form};
        if (k < p - 1) return {k, (uint32_t)(p2 - p + 1), Method::closed_form};
        return {k, (uint32_t)(p2 - p), Method::closed_form};
      }
      return {k, (uint32_t)(p2 - p), Method::closed_form};
    }
    case Variant::thm4: {
      require_hypothesis(spec.field == Field::fp, "field must be F_p");
      require_hypothesis(pp.w == 1, "w must be 1");
      require_hypothesis(s <= half, "index set size must be <= (p-1)/2");
      if (k < p) return {k, (uint32_t)(p2 - p + 1), Method::closed_form};
      return {k, (uint32_t)(p2 - p), Method::upper_bound};
    }
    case Variant::thm5: {
      require_hypothesis(spec.field == Field::fp, "field must be F_p");
      require_hypothesis(pp.w >= 2, "w must be >= 2");
      require_hypothesis(s <= half, "index set size must be <= (p-1)/2");
      if (k == 0) return {k, (uint32_t)p2, Method::closed_form};
      if (k < p - 1) return {k, (uint32_t)(p2 - p + 1), Method::closed_form};
      return {k, (uint32_t)(p2 - p), Method::upper_bound};
    }
    case Variant::fp_upper_legendre: {
      require_hypothesis(spec.field == Field::fp, "field must be F_p");
      uint64_t threshold = pp.w == 1 ? p : 2 * p - 1;
      if (k < threshold) {
        throw PreconditionError("hypothesis failed: substitution bound needs k >= " +
                                std::to_string(threshold));
      }
      uint64_t value;
      if (pp.w == 1) {
        value = (p - 1) * p / 2 + 1;
      } else if (pp.w % 2 == 1) {
        value = (p - 1) * p / 2 + p;
      } else {
        value = (p - 1) * p / 2 + half + 1;
      }
      return {k, (uint32_t)value, Method::upper_bound};
    }
    case Variant::fp_lower: {
      require_hypothesis(spec.field == Field::fp, "field must be F_p");
      require_hypothesis(s <= half, "index set size must be <= (p-1)/2");
      uint64_t weight = pp.w >= 2 ? (p - 1) * s : p * s;
      if (k < weight) return {k, (uint32_t)(p + 1), Method::lower_bound};
      return {k, 0, Method::closed_form};
    }
  }
  throw std::logic_error("unreachable theorem variant");
}

PeriodicSequence sequence_for_spec(const TheoremSpec& spec) {
  const PrimeParams& pp = spec.params;
  switch (spec.variant) {
    case Variant::thm1:
    case Variant::thm2:
    case Variant::thm3_bound:
      return gen_indicator(pp, spec.index_set);
    case Variant::complement:
      return gen_complement(pp, spec.index_set);
    case Variant::corollary:
      return gen_threshold(pp);
    case Variant::thm4:
    case Variant::thm5:
    case Variant::fp_lower:
      return gen_indicator(pp, spec.index_set).over_modulus(pp.p);
    case Variant::fp_upper_legendre:
      return gen_legendre(pp).over_modulus(pp.p);
  }
  throw std::logic_error("unreachable theorem variant");
}

VerificationReport verify_theorem(const TheoremSpec& spec, uint32_t k_max,
                                  const ExhaustiveOptions& options) {
  // surface hypothesis violations before any search runs; the substitution
  // bound has no k = 0 claim, so probe it at a k where it applies
  if (spec.variant == Variant::fp_upper_legendre) {
    (void)klc_theorem(spec, 2 * spec.params.p);
  } else {
    (void)klc_theorem(spec, 0);
  }

  PeriodicSequence seq = sequence_for_spec(spec);
  std::optional<PeriodicSequence> alt;
  if (spec.variant == Variant::corollary) alt = gen_legendre(spec.params);

  k_max = std::min(k_max, seq.period);
  uint64_t required = pattern_count(seq.period, seq.alphabet_modulus, k_max);
  uint64_t total = required;
  if (alt) total = required > UINT64_MAX / 2 ? UINT64_MAX : required * 2;
  if (total > options.budget) throw BudgetError(total, options.budget);

  Spectrum sp = spectrum(seq, k_max, options);
  std::optional<Spectrum> alt_sp;
  if (alt) alt_sp = spectrum(*alt, k_max, options);

  VerificationReport report;
  report.variant = variant_name(spec.variant);
  report.p = spec.params.p;
  report.w = spec.params.w;
  report.index_set = spec.index_set;
  report.field = spec.field;

  bool passed = true;
  for (uint32_t k = 0; k <= k_max; ++k) {
    VerificationEntry entry;
    entry.k = k;
    entry.exhaustive = sp.points[k].lc;
    if (alt_sp) entry.exhaustive_alt = alt_sp->points[k].lc;
    try {
      entry.expected = klc_theorem(spec, k);
      switch (entry.expected.method) {
        case Method::closed_form:
          entry.status = entry.exhaustive == entry.expected.lc &&
                                 (!entry.exhaustive_alt || *entry.exhaustive_alt == entry.expected.lc)
                             ? VerifyStatus::match
                             : VerifyStatus::mismatch;
          break;
        case Method::lower_bound:
          entry.status = entry.exhaustive >= entry.expected.lc ? VerifyStatus::bound_ok
                                                               : VerifyStatus::bound_violated;
          break;
        case Method::upper_bound:
          entry.status = entry.exhaustive <= entry.expected.lc ? VerifyStatus::bound_ok
                                                               : VerifyStatus::bound_violated;
          break;
        case Method::exhaustive:
          entry.status = VerifyStatus::no_claim;
          break;
      }
    } catch (const PreconditionError&) {
      entry.expected = {k, 0, Method::exhaustive};
      entry.status = VerifyStatus::no_claim;
    }
    if (entry.status == VerifyStatus::mismatch || entry.status == VerifyStatus::bound_violated) {
      passed = false;
    }
    report.entries.push_back(std::move(entry));
  }
  report.passed = passed;
  return report;
}

}  // namespace pqseq
