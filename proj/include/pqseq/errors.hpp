#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace pqseq {

/// Thrown when an exhaustive search would exceed its pattern budget.
/// Carries the number of patterns the request would need.
class BudgetError : public std::runtime_error {
 public:
  BudgetError(uint64_t required, uint64_t budget)
      : std::runtime_error("pattern budget exceeded: need " + std::to_string(required) +
                           " LC evaluations, budget is " + std::to_string(budget)),
        required_(required),
        budget_(budget) {}

  uint64_t required() const noexcept { return required_; }
  uint64_t budget() const noexcept { return budget_; }

 private:
  uint64_t required_;
  uint64_t budget_;
};

/// A closed-form evaluator was asked about inputs outside its hypothesis
/// domain (e.g. 2 not a primitive root, index set too large).
class PreconditionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An engine that relies on special structure (irreducible cyclotomic
/// factors, full least period) was given an input without it.  Callers
/// fall back to the generic gcd engine.
class StructureError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace pqseq
