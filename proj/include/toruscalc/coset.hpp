#pragma once

#include <cstddef>
#include <string>

#include "toruscalc/presentation.hpp"

namespace toruscalc {

inline constexpr std::size_t kDefaultCosetBudget = 100000;

/// Result of a coset enumeration over the trivial subgroup.
///
/// `completed` with index k is a certificate that the presented group has
/// order exactly k (the closed table is the regular permutation
/// representation).  `budget_exceeded` certifies nothing: triviality of a
/// finitely presented group is undecidable, so running out of budget is a
/// first-class outcome, not an error.
struct EnumerationOutcome {
  enum class Status { completed, budget_exceeded };

  Status status = Status::budget_exceeded;
  std::size_t index = 0;           // meaningful only when completed
  std::size_t cosets_defined = 0;  // total definitions over the run
  std::size_t budget = 0;

  bool completed() const { return status == Status::completed; }

  friend bool operator==(const EnumerationOutcome&, const EnumerationOutcome&) =
      default;
};

/// Todd-Coxeter enumeration of the cosets of the trivial subgroup, HLT
/// strategy: relator tracing with immediate gap filling, switching to a
/// definition-free lookahead pass plus table compaction when the coset
/// budget (maximum live rows) is reached.  Deterministic for a fixed
/// presentation and budget.
/// Throws std::invalid_argument if budget < 1.
EnumerationOutcome coset_enumerate(const Presentation& p, std::size_t budget);

std::string to_string(const EnumerationOutcome& o);

}  // namespace toruscalc
