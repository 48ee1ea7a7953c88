#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pqseq/lincomp.hpp"
#include "pqseq/quotients.hpp"
#include "pqseq/seqgen.hpp"

namespace pqseq {

enum class Field { f2, fp };

enum class Method { exhaustive, closed_form, lower_bound, upper_bound };

const char* method_name(Method m);

/// One point of an error linear complexity spectrum.
struct SpectrumPoint {
  uint32_t k = 0;
  uint32_t lc = 0;
  Method method = Method::exhaustive;
};

/// Identifies one of the closed-form results or bounds the library can
/// evaluate and verify.
enum class Variant {
  thm1,               // F_2, w >= 2, 2 primitive mod p^2: exact spectrum
  thm2,               // F_2, w = 1, same assumption: exact spectrum
  thm3_bound,         // F_2, ord(2 mod p^2) = lambda*p: lower bound lambda*p
  complement,         // F_2, w >= 2 complement-style sequence: exact spectrum
  corollary,          // F_2 threshold/Legendre sequences: exact spectrum
  thm4,               // F_p, w = 1: exact for k < p, upper bound beyond
  thm5,               // F_p, w >= 2: exact for k < p-1, upper bound beyond
  fp_upper_legendre,  // F_p Legendre sequence: substitution upper bound
  fp_lower,           // F_p: period argument lower bound p+1
};

const char* variant_name(Variant v);
std::optional<Variant> variant_from_name(const std::string& name);

struct TheoremSpec {
  PrimeParams params;
  std::vector<uint32_t> index_set;  // I or J depending on the variant
  Field field = Field::f2;
  Variant variant = Variant::thm1;
};

inline constexpr uint64_t kDefaultBudget = 100'000'000;

struct ExhaustiveOptions {
  uint64_t budget = kDefaultBudget;  // max LC evaluations per request
  bool use_structured = true;        // allow the three-divisibility F_2 engine
  unsigned threads = 0;              // 0 = hardware concurrency
};

/// Number of error patterns of weight <= k on a period-T sequence over an
/// alphabet of size q, i.e. sum_{i<=k} C(T,i)(q-1)^i, saturating at
/// UINT64_MAX.
uint64_t pattern_count(uint32_t period, uint32_t q, uint32_t k);

/// Exact k-error linear complexity by enumerating every error pattern of
/// weight <= k (positions in lexicographic order, nonzero error values in
/// increasing residue order).  Refuses to start when the pattern count
/// exceeds the budget.
uint32_t klc_exhaustive(const PeriodicSequence& seq, uint32_t k,
                        const ExhaustiveOptions& options = {});

/// Value of the identified closed-form result at k, marked closed_form
/// where the result is exact and lower_bound/upper_bound where it only
/// bounds.  Throws PreconditionError outside the hypothesis domain.
SpectrumPoint klc_theorem(const TheoremSpec& spec, uint32_t k);

struct Spectrum {
  std::vector<SpectrumPoint> points;  // k = 0 .. last computed
  bool truncated = false;             // true when the budget cut the range
  uint32_t k_requested = 0;
  uint64_t required_patterns = 0;     // cost of the full request
};

/// Exhaustive spectrum for k = 0..k_max; on budget exhaustion returns the
/// prefix that fits together with a truncation marker.
Spectrum spectrum(const PeriodicSequence& seq, uint32_t k_max,
                  const ExhaustiveOptions& options = {});

enum class VerifyStatus { match, bound_ok, mismatch, bound_violated, no_claim };

const char* verify_status_name(VerifyStatus s);

struct VerificationEntry {
  uint32_t k = 0;
  SpectrumPoint expected;
  uint32_t exhaustive = 0;
  std::optional<uint32_t> exhaustive_alt;  // second sequence (threshold/Legendre pair)
  VerifyStatus status = VerifyStatus::match;
};

struct VerificationReport {
  std::string variant;
  uint32_t p = 0;
  uint32_t w = 1;
  std::vector<uint32_t> index_set;
  Field field = Field::f2;
  std::vector<VerificationEntry> entries;
  bool passed = false;
};

/// Compares the closed-form values against the exhaustive oracle for every
/// k <= k_max: exact values must match, bounds must be respected.  Never
/// silently passes; each k is listed with both values and a status.
VerificationReport verify_theorem(const TheoremSpec& spec, uint32_t k_max,
                                  const ExhaustiveOptions& options = {});

/// The sequence a theorem spec talks about (indicator, complement or
/// Legendre construction over the right field).
PeriodicSequence sequence_for_spec(const TheoremSpec& spec);

}  // namespace pqseq
