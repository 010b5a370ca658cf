#include "renyi/state.hpp"

#include "renyi/error.hpp"

namespace renyi {

bool states_equal(const RenyiState& P, const RenyiState& Q) {
  if (P.carrier() != Q.carrier()) return false;
  const auto& p = P.representative().weights();
  const auto& q = Q.representative().weights();

  // The factor is pinned at the first atom where either weight is nonzero;
  // it must then hold everywhere, and the zero patterns must agree.
  Rational factor;
  bool have_factor = false;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i].is_zero() != q[i].is_zero()) return false;
    if (p[i].is_zero()) continue;
    Rational ratio = q[i] / p[i];
    if (!have_factor) {
      factor = ratio;
      have_factor = true;
    } else if (ratio != factor) {
      return false;
    }
  }
  return true;  // a nonzero atom always exists, so have_factor held
}

bool is_elementary_condition(const RenyiState& P, const Event& B) {
  return mass(B, P.representative()).is_positive();
}

Rational condition(const RenyiState& P, const NonNegFunction& A, const Event& B) {
  const auto& mu = P.representative();
  require_same_carrier(A.carrier(), mu.carrier(), "condition");
  Rational denominator = mass(B, mu);
  if (!denominator.is_positive()) {
    throw PreconditionError(B.str() + " is not an elementary condition (zero mass)");
  }
  Rational numerator;
  for (std::size_t i = 0; i < mu.carrier().size(); ++i) {
    if (B.contains(i)) numerator += A.at(i) * mu.weight(i);
  }
  return numerator / denominator;
}

Rational condition(const RenyiState& P, const Event& A, const Event& B) {
  return condition(P, NonNegFunction::indicator(A), B);
}

}  // namespace renyi
