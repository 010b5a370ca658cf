#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "renyi/event.hpp"
#include "renyi/state.hpp"

namespace renyi {

/// Result of checking the three bunch axioms on a candidate family of
/// events. Violations are report content, not errors.
struct BunchReport {
  bool no_empty_member = true;                          // axiom 1
  bool union_closed = true;                             // axiom 2
  std::optional<std::pair<Event, Event>> missing_union; // witness for axiom 2
  bool covers_carrier = true;                           // axiom 3
  std::vector<std::string> uncovered_atoms;             // witness for axiom 3

  bool ok() const { return no_empty_member && union_closed && covers_carrier; }
};

/// Checks the bunch axioms on a candidate family:
///   1. the empty event is not a member,
///   2. the family is closed under pairwise union,
///   3. the union of all members is the whole carrier.
BunchReport validate_bunch(const Carrier& carrier, const std::vector<Event>& conditions);

/// A family of events satisfying the bunch axioms. Conditions are stored
/// deduplicated in a canonical order (lexicographic on the membership mask),
/// so iteration and reports are deterministic.
class Bunch {
 public:
  /// Throws PreconditionError when the family violates an axiom; use
  /// validate_bunch() first to obtain a report instead.
  Bunch(Carrier carrier, std::vector<Event> conditions);

  const Carrier& carrier() const { return carrier_; }
  const std::vector<Event>& conditions() const { return conditions_; }
  std::size_t size() const { return conditions_.size(); }

  std::optional<std::size_t> find(const Event& condition) const;

 private:
  struct trusted_t {};
  Bunch(trusted_t, Carrier carrier, std::vector<Event> conditions);

  friend Bunch maximal_bunch(const RenyiState& P, std::uint64_t limit);

  Carrier carrier_;
  std::vector<Event> conditions_;
};

/// Smallest union-closed family containing the input.
/// Throws PreconditionError when the input contains the empty event or does
/// not cover the carrier (axioms 1 and 3 cannot be repaired by closure).
Bunch close_under_union(const Carrier& carrier, std::vector<Event> conditions);

/// The maximal bunch of P: all events of positive mass. Guarded by `limit`
/// since the enumeration is exponential; beyond the guard, use
/// is_elementary_condition as the membership predicate instead.
Bunch maximal_bunch(const RenyiState& P, std::uint64_t limit);

}  // namespace renyi
