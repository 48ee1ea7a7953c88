#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "pqseq/errors.hpp"
#include "pqseq/kerror.hpp"

using namespace pqseq;

namespace {

PeriodicSequence random_sequence(std::mt19937& rng, uint32_t q, uint32_t period) {
  std::uniform_int_distribution<uint32_t> sym(0, q - 1);
  std::vector<uint32_t> s(period);
  for (auto& x : s) x = sym(rng);
  return PeriodicSequence(q, std::move(s));
}

// Independent oracle: enumerate every sequence of the same period and
// alphabet, and minimize lc_gcd over the Hamming ball of radius k.
std::vector<uint32_t> ball_minimum_spectrum(const PeriodicSequence& seq, uint32_t k_max) {
  const uint32_t q = seq.alphabet_modulus, t = seq.period;
  uint64_t total = 1;
  for (uint32_t i = 0; i < t; ++i) total *= q;
  std::vector<uint32_t> best(k_max + 1, UINT32_MAX);
  std::vector<uint32_t> cand(t, 0);
  for (uint64_t code = 0; code < total; ++code) {
    uint64_t c = code;
    uint32_t dist = 0;
    for (uint32_t i = 0; i < t; ++i) {
      cand[i] = (uint32_t)(c % q);
      c /= q;
      if (cand[i] != seq.symbols[i]) ++dist;
    }
    if (dist > k_max) continue;
    uint32_t lc = lc_gcd(PeriodicSequence(q, cand));
    for (uint32_t k = dist; k <= k_max; ++k) best[k] = std::min(best[k], lc);
  }
  return best;
}

}  // namespace

TEST_CASE("pattern counting") {
  CHECK(pattern_count(9, 2, 0) == 1);
  CHECK(pattern_count(9, 2, 2) == 1 + 9 + 36);
  CHECK(pattern_count(9, 3, 1) == 1 + 18);
  CHECK(pattern_count(25, 2, 25) == 1u << 25);
  CHECK(pattern_count(169, 13, 169) == UINT64_MAX);  // saturates
  CHECK(pattern_count(9, 2, 40) == pattern_count(9, 2, 9));
}

TEST_CASE("exhaustive frozen values") {
  auto h = gen_indicator(PrimeParams::make(3, 2), {2});
  CHECK(klc_exhaustive(h, 0) == lc_gcd(h));
  CHECK(klc_exhaustive(h, 1) == 7);
  CHECK(klc_exhaustive(h, 2) == 0);
  CHECK(klc_exhaustive(h, 100) == 0);
}

TEST_CASE("budget pre-check names the required pattern count") {
  auto h = gen_indicator(PrimeParams::make(5, 2), {1, 2});
  ExhaustiveOptions opts;
  opts.budget = 10;
  try {
    klc_exhaustive(h, 3, opts);
    FAIL("expected a budget error");
  } catch (const BudgetError& e) {
    CHECK(e.required() == pattern_count(25, 2, 3));
    CHECK(e.budget() == 10);
    CHECK(std::string(e.what()).find(std::to_string(e.required())) != std::string::npos);
  }
}

TEST_CASE("exhaustive spectra match the all-sequence ball oracle") {
  std::mt19937 rng(5150);
  for (uint32_t q : {2u, 3u}) {
    for (int round = 0; round < (q == 2 ? 12 : 4); ++round) {
      auto seq = random_sequence(rng, q, 9);
      uint32_t k_max = std::min(seq.weight() + 1, 6u);
      auto oracle = ball_minimum_spectrum(seq, k_max);
      auto sp = spectrum(seq, k_max);
      REQUIRE(sp.points.size() == k_max + 1);
      for (uint32_t k = 0; k <= k_max; ++k) {
        CHECK(sp.points[k].lc == oracle[k]);
        CHECK(sp.points[k].method == Method::exhaustive);
      }
    }
  }
}

TEST_CASE("spectra are monotone and terminate at the weight") {
  std::mt19937 rng(31337);
  for (uint32_t q : {2u, 5u}) {
    for (int round = 0; round < 6; ++round) {
      auto seq = random_sequence(rng, q, 25);
      if (seq.is_zero()) continue;
      uint32_t k_max = std::min(seq.weight(), 4u);
      auto sp = spectrum(seq, k_max);
      CHECK(sp.points[0].lc == lc_gcd(seq));
      for (uint32_t k = 1; k <= k_max; ++k) CHECK(sp.points[k].lc <= sp.points[k - 1].lc);
    }
  }
  // terminal zero exactly at the weight
  auto h = gen_indicator(PrimeParams::make(3, 1), {1});
  auto sp = spectrum(h, h.weight());
  CHECK(sp.points.back().lc == 0);
  CHECK(sp.points[h.weight() - 1].lc > 0);
  // the zero sequence stays at zero
  auto zsp = spectrum(PeriodicSequence(2, std::vector<uint32_t>(9, 0)), 3);
  for (const auto& pt : zsp.points) CHECK(pt.lc == 0);
}

TEST_CASE("spectrum truncates when the budget runs out") {
  auto h = gen_indicator(PrimeParams::make(5, 2), {1, 2});
  ExhaustiveOptions opts;
  opts.budget = pattern_count(25, 2, 2);
  auto sp = spectrum(h, 8, opts);
  CHECK(sp.truncated);
  CHECK(sp.points.size() == 3);  // k = 0, 1, 2 fit
  CHECK(sp.k_requested == 8);
  CHECK(sp.required_patterns == pattern_count(25, 2, 8));
}

TEST_CASE("results are identical across worker counts") {
  auto h = gen_complement(PrimeParams::make(5, 2), {0, 3});
  for (uint32_t k : {0u, 1u, 5u, 9u}) {
    ExhaustiveOptions serial, parallel;
    serial.threads = 1;
    parallel.threads = 4;
    CHECK(klc_exhaustive(h, k, serial) == klc_exhaustive(h, k, parallel));
  }
}

TEST_CASE("structured and gcd evaluation paths agree") {
  std::mt19937 rng(2718);
  for (int round = 0; round < 5; ++round) {
    auto seq = random_sequence(rng, 2, 25);
    for (uint32_t k : {1u, 2u, 3u}) {
      ExhaustiveOptions with_structure, without;
      without.use_structured = false;
      CHECK(klc_exhaustive(seq, k, with_structure) == klc_exhaustive(seq, k, without));
    }
  }
}

TEST_CASE("nonbinary error values are searched") {
  // reaching zero at k = weight over F_3 needs error value 2, not a bit flip
  auto h = gen_indicator(PrimeParams::make(3, 1), {1}).over_modulus(3);
  CHECK(h.weight() == 3);
  CHECK(klc_exhaustive(h, 2) > 0);
  CHECK(klc_exhaustive(h, 3) == 0);
}

TEST_CASE("closed-form evaluator frozen values") {
  TheoremSpec spec;
  spec.params = PrimeParams::make(5, 2);
  spec.index_set = {1, 2};
  spec.field = Field::f2;
  spec.variant = Variant::thm1;
  CHECK(klc_theorem(spec, 3).lc == 20);
  CHECK(klc_theorem(spec, 3).method == Method::closed_form);
  CHECK(klc_theorem(spec, 0).lc == 20);  // even index set size
  CHECK(klc_theorem(spec, 8).lc == 0);

  spec.index_set = {1};
  CHECK(klc_theorem(spec, 0).lc == 24);
  CHECK(klc_theorem(spec, 1).lc == 21);
  CHECK(klc_theorem(spec, 3).lc == 21);
  CHECK(klc_theorem(spec, 4).lc == 0);

  TheoremSpec t2;
  t2.params = PrimeParams::make(3, 1);
  t2.index_set = {1};
  t2.field = Field::f2;
  t2.variant = Variant::thm2;
  CHECK(klc_theorem(t2, 2).lc == 7);
  CHECK(klc_theorem(t2, 3).lc == 0);

  TheoremSpec comp;
  comp.params = PrimeParams::make(5, 2);
  comp.index_set = {0, 1};
  comp.field = Field::f2;
  comp.variant = Variant::complement;
  CHECK(klc_theorem(comp, 0).lc == 25);
  CHECK(klc_theorem(comp, 1).lc == 20);
  CHECK(klc_theorem(comp, 8).lc == 5);

  TheoremSpec t4;
  t4.params = PrimeParams::make(3, 1);
  t4.index_set = {1};
  t4.field = Field::fp;
  t4.variant = Variant::thm4;
  CHECK(klc_theorem(t4, 0).lc == 7);
  CHECK(klc_theorem(t4, 2).method == Method::closed_form);
  CHECK(klc_theorem(t4, 3).lc == 6);
  CHECK(klc_theorem(t4, 3).method == Method::upper_bound);

  TheoremSpec t5;
  t5.params = PrimeParams::make(5, 2);
  t5.index_set = {1, 4};
  t5.field = Field::fp;
  t5.variant = Variant::thm5;
  CHECK(klc_theorem(t5, 0).lc == 25);
  CHECK(klc_theorem(t5, 3).lc == 21);
  CHECK(klc_theorem(t5, 4).lc == 20);
  CHECK(klc_theorem(t5, 4).method == Method::upper_bound);
}

TEST_CASE("closed-form evaluator names failed hypotheses") {
  TheoremSpec spec;
  spec.params = PrimeParams::make(7, 2);  // 2 is not primitive mod 49
  spec.index_set = {1};
  spec.field = Field::f2;
  spec.variant = Variant::thm1;
  CHECK_THROWS_WITH_AS(klc_theorem(spec, 0),
                       "hypothesis failed: 2 is not a primitive root mod p^2", PreconditionError);

  spec.params = PrimeParams::make(5, 2);
  spec.index_set = {0, 1, 2};  // larger than (p-1)/2
  CHECK_THROWS_AS(klc_theorem(spec, 0), PreconditionError);

  spec.index_set = {1};
  spec.field = Field::fp;
  CHECK_THROWS_AS(klc_theorem(spec, 0), PreconditionError);  // wrong field

  TheoremSpec upper;
  upper.params = PrimeParams::make(5, 2);
  upper.field = Field::fp;
  upper.variant = Variant::fp_upper_legendre;
  CHECK_THROWS_AS(klc_theorem(upper, 3), PreconditionError);  // below 2p-1
  CHECK(klc_theorem(upper, 9).lc == 13);
  upper.params = PrimeParams::make(5, 3);
  CHECK(klc_theorem(upper, 9).lc == 15);
  upper.params = PrimeParams::make(5, 1);
  CHECK(klc_theorem(upper, 5).lc == 11);

  TheoremSpec lower;
  lower.params = PrimeParams::make(5, 2);
  lower.index_set = {2, 3};
  lower.field = Field::fp;
  lower.variant = Variant::fp_lower;
  CHECK(klc_theorem(lower, 7).lc == 6);
  CHECK(klc_theorem(lower, 7).method == Method::lower_bound);
  CHECK(klc_theorem(lower, 8).lc == 0);
}

TEST_CASE("proof-style error polynomials reach multiplicity p") {
  // w = 1: subtracting |I| at every residue of the unit sum
  for (uint32_t p : {3u, 5u}) {
    std::vector<std::vector<uint32_t>> sets{{0}, {1}};
    if (p == 5) sets.push_back({2, 4});
    for (const auto& idx : sets) {
      if (idx.size() > (p - 1) / 2) continue;
      auto params1 = PrimeParams::make(p, 1);
      auto h1 = gen_indicator(params1, idx).over_modulus(p);
      FieldPoly s1 = generating_poly(h1);
      uint32_t alpha = (uint32_t)(idx.size() % p);
      // error -alpha * (1 + X + ... + X^{p-1}), exactly p terms
      std::vector<uint32_t> e1(p, (p - alpha) % p);
      s1 += FieldPoly(p, e1);
      CHECK(multiplicity_at_one(s1) >= p);

      for (uint32_t w = 2; w < p; ++w) {
        auto params = PrimeParams::make(p, w);
        auto h = gen_indicator(params, idx).over_modulus(p);
        FieldPoly s = generating_poly(h);
        // error -|I| * (X + ... + X^{p-1}), exactly p-1 terms
        std::vector<uint32_t> e(p, (p - alpha) % p);
        e[0] = 0;
        s += FieldPoly(p, e);
        CHECK(multiplicity_at_one(s) >= p);
      }
    }
  }
}

TEST_CASE("verification report for an exact theorem") {
  TheoremSpec spec;
  spec.params = PrimeParams::make(5, 2);
  spec.index_set = {1};
  spec.field = Field::f2;
  spec.variant = Variant::thm1;
  auto report = verify_theorem(spec, 4);
  CHECK(report.passed);
  REQUIRE(report.entries.size() == 5);
  const uint32_t expected[] = {24, 21, 21, 21, 0};
  for (uint32_t k = 0; k <= 4; ++k) {
    CHECK(report.entries[k].exhaustive == expected[k]);
    CHECK(report.entries[k].status == VerifyStatus::match);
  }
}

TEST_CASE("verification is honest about the complement tail") {
  TheoremSpec spec;
  spec.params = PrimeParams::make(3, 2);
  spec.index_set = {2};
  spec.field = Field::f2;
  spec.variant = Variant::complement;
  auto report = verify_theorem(spec, 5);
  CHECK_FALSE(report.passed);
  const uint32_t truth[] = {7, 7, 3, 2, 1, 0};
  const VerifyStatus status[] = {VerifyStatus::match,    VerifyStatus::match,
                                 VerifyStatus::match,    VerifyStatus::mismatch,
                                 VerifyStatus::mismatch, VerifyStatus::match};
  for (uint32_t k = 0; k <= 5; ++k) {
    CHECK(report.entries[k].exhaustive == truth[k]);
    CHECK(report.entries[k].status == status[k]);
  }
}

TEST_CASE("verification respects bounds") {
  TheoremSpec spec;
  spec.params = PrimeParams::make(7, 2);
  spec.index_set = {3};
  spec.field = Field::f2;
  spec.variant = Variant::thm3_bound;
  auto report = verify_theorem(spec, 2);
  CHECK(report.passed);
  for (const auto& entry : report.entries) {
    CHECK(entry.status == VerifyStatus::bound_ok);
    CHECK(entry.exhaustive >= 21);
  }

  TheoremSpec t4;
  t4.params = PrimeParams::make(3, 1);
  t4.index_set = {1};
  t4.field = Field::fp;
  t4.variant = Variant::thm4;
  auto r4 = verify_theorem(t4, 3);
  CHECK(r4.passed);
  CHECK(r4.entries[2].status == VerifyStatus::match);
  CHECK(r4.entries[3].status == VerifyStatus::bound_ok);
}

TEST_CASE("verification pairs the threshold and legendre spectra") {
  TheoremSpec spec;
  spec.params = PrimeParams::make(3, 2);
  spec.field = Field::f2;
  spec.variant = Variant::corollary;
  auto report = verify_theorem(spec, 2);
  CHECK(report.passed);
  for (const auto& entry : report.entries) {
    REQUIRE(entry.exhaustive_alt.has_value());
    CHECK(entry.exhaustive == *entry.exhaustive_alt);
  }
  CHECK(report.entries[0].exhaustive == 8);
  CHECK(report.entries[1].exhaustive == 7);
  CHECK(report.entries[2].exhaustive == 0);
}

TEST_CASE("substitution bound verification over F_p") {
  TheoremSpec spec;
  spec.params = PrimeParams::make(5, 1);
  spec.field = Field::fp;
  spec.variant = Variant::fp_upper_legendre;
  auto report = verify_theorem(spec, 5);
  CHECK(report.passed);
  for (uint32_t k = 0; k < 5; ++k) CHECK(report.entries[k].status == VerifyStatus::no_claim);
  CHECK(report.entries[5].status == VerifyStatus::bound_ok);
  CHECK(report.entries[5].expected.lc == 11);
  CHECK(report.entries[5].exhaustive <= 11);
}

TEST_CASE("substitution reading: all zero-quotient positions, not just zero") {
  // the claimed w = 1 bound (p-1)p/2 + 1 matches substituting at every
  // position with vanishing quotient; substituting at position 0 alone
  // leaves the complexity at the full period
  auto params = PrimeParams::make(5, 1);
  auto f = gen_legendre(params).over_modulus(5);
  auto full = substituted(f, quotient_zero_positions(params), 3);
  CHECK(lc_gcd(full) == 11);
  auto only_zero = substituted(f, {0}, 3);
  CHECK(lc_gcd(only_zero) == 25);
}
