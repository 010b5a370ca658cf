#pragma once

#include "renyi/event.hpp"
#include "renyi/function.hpp"
#include "renyi/measure.hpp"
#include "renyi/rational.hpp"

namespace renyi {

/// A Rényi state: the scale-equivalence class [μ] = {cμ | c > 0} of a
/// σ-finite measure. It carries every conditional probability of μ but no
/// absolute normalization, which is exactly what an improper prior needs.
///
/// The class is stored through one representative; every operation on
/// states is invariant under replacing it by any positive multiple.
class RenyiState {
 public:
  explicit RenyiState(SigmaFiniteMeasure representative)
      : representative_(std::move(representative)) {}

  const SigmaFiniteMeasure& representative() const { return representative_; }
  const Carrier& carrier() const { return representative_.carrier(); }

 private:
  SigmaFiniteMeasure representative_;
};

/// True iff the representatives differ by one positive factor on all atoms
/// simultaneously (in particular the zero patterns must match).
bool states_equal(const RenyiState& P, const RenyiState& Q);

/// True iff 0 < μ(B); finiteness is automatic on a finite carrier.
bool is_elementary_condition(const RenyiState& P, const Event& B);

/// P(A|B) = ∫ A·1_B dμ / μ(B). Independent of the representative.
/// Throws PreconditionError when B is not an elementary condition.
Rational condition(const RenyiState& P, const NonNegFunction& A, const Event& B);

/// Convenience overload: P(A|B) for an event A via its indicator.
Rational condition(const RenyiState& P, const Event& A, const Event& B);

}  // namespace renyi
