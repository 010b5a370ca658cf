#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "renyi/bunch.hpp"
#include "renyi/rational.hpp"
#include "renyi/state.hpp"

namespace renyi {

/// A family of conditional probability tables {P(·|B) | B in a bunch}.
///
/// Each table is a full-carrier vector that vanishes outside its condition
/// and sums to exactly 1; tables are stored in the bunch's canonical
/// condition order.
class ConditionalFamily {
 public:
  ConditionalFamily(Bunch bunch, std::vector<std::vector<Rational>> tables);

  /// Builds from (condition, table) pairs; every bunch condition must get
  /// exactly one table.
  ConditionalFamily(Bunch bunch, const std::vector<std::pair<Event, std::vector<Rational>>>& tables);

  const Bunch& bunch() const { return bunch_; }
  const Carrier& carrier() const { return bunch_.carrier(); }

  const std::vector<Rational>& table(std::size_t condition_index) const {
    return tables_[condition_index];
  }

  /// P(A | conditions()[i]) = Σ_{a ∈ A} table[i][a].
  Rational prob(const Event& A, std::size_t condition_index) const;

 private:
  Bunch bunch_;
  std::vector<std::vector<Rational>> tables_;
};

struct ConsistencyViolation {
  std::string atom;  // the singleton event A witnessing the failure
  Event inner;       // B
  Event outer;       // C, with B ⊂ C
  Rational lhs;      // P(A|B)
  Rational rhs;      // P(AB|C) / P(B|C)
};

struct ConsistencyReport {
  bool consistent = true;
  std::optional<ConsistencyViolation> violation;  // first violation found
  std::size_t nested_pairs_checked = 0;

  bool ok() const { return consistent; }
};

/// Verifies the consistency relation P(A|B) = P(AB|C)/P(B|C) for every
/// nested pair B ⊂ C of the bunch with P(B|C) > 0. A ranges over singletons,
/// which suffices because both sides are additive in A.
ConsistencyReport check_consistency(const ConditionalFamily& F);

/// Reconstructs a generating state [μ] with μ(A∩B)/μ(B) = P(A|B) for every
/// condition B, by propagating relative scales through unions and then
/// verifying every constraint.
///
/// The representative is deterministic: the first condition in canonical
/// order gets scale 1, i.e. μ of that condition is exactly 1.
///
/// Throws PreconditionError when some P(B | B∪C) = 0 (degenerate pair), and
/// NotRepresentableError (with a witness) when the verification fails —
/// which happens exactly when the family is inconsistent.
RenyiState reconstruct(const ConditionalFamily& F);

}  // namespace renyi
