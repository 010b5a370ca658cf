#pragma once

#include <vector>

#include "renyi/carrier.hpp"
#include "renyi/event.hpp"
#include "renyi/function.hpp"
#include "renyi/rational.hpp"

namespace renyi {

/// Measure with exact finite nonnegative weights on a finite carrier.
///
/// On such a carrier every measure is automatically σ-finite. The zero
/// measure is excluded at construction: it generates no conditional
/// probabilities.
class SigmaFiniteMeasure {
 public:
  SigmaFiniteMeasure(Carrier carrier, std::vector<Rational> weights);

  /// Weight 1 on every atom.
  static SigmaFiniteMeasure counting(Carrier carrier);

  const Carrier& carrier() const { return carrier_; }
  const std::vector<Rational>& weights() const { return weights_; }
  const Rational& weight(std::size_t atom_index) const { return weights_[atom_index]; }

  Rational total() const;

  friend bool operator==(const SigmaFiniteMeasure& a, const SigmaFiniteMeasure& b) {
    return a.carrier_ == b.carrier_ && a.weights_ == b.weights_;
  }

 private:
  Carrier carrier_;
  std::vector<Rational> weights_;
};

/// ∫ f dm = Σ_ω f(ω)·m(ω), exact.
Rational integrate(const NonNegFunction& f, const SigmaFiniteMeasure& m);

/// m(B) = ∫ 1_B dm.
Rational mass(const Event& B, const SigmaFiniteMeasure& m);

/// c·m for c > 0. Throws PreconditionError for c ≤ 0.
SigmaFiniteMeasure scale(const SigmaFiniteMeasure& m, const Rational& c);

/// m(· ∩ B). Throws PreconditionError when the restriction would be the
/// zero measure.
SigmaFiniteMeasure restrict_to(const SigmaFiniteMeasure& m, const Event& B);

}  // namespace renyi
