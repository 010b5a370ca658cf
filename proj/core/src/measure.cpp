#include "renyi/measure.hpp"

#include <algorithm>

#include "renyi/error.hpp"

namespace renyi {

SigmaFiniteMeasure::SigmaFiniteMeasure(Carrier carrier, std::vector<Rational> weights)
    : carrier_(std::move(carrier)), weights_(std::move(weights)) {
  if (weights_.size() != carrier_.size()) {
    throw Error("measure weights do not cover the carrier");
  }
  bool any_positive = false;
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    if (weights_[i].is_negative()) {
      throw Error("negative weight at atom '" + carrier_.atom(i) + "'");
    }
    any_positive = any_positive || weights_[i].is_positive();
  }
  if (!any_positive) throw Error("the zero measure is not admitted");
}

SigmaFiniteMeasure SigmaFiniteMeasure::counting(Carrier carrier) {
  std::vector<Rational> weights(carrier.size(), Rational(1));
  return SigmaFiniteMeasure(std::move(carrier), std::move(weights));
}

Rational SigmaFiniteMeasure::total() const {
  Rational sum;
  for (const auto& w : weights_) sum += w;
  return sum;
}

Rational integrate(const NonNegFunction& f, const SigmaFiniteMeasure& m) {
  require_same_carrier(f.carrier(), m.carrier(), "integrate");
  Rational sum;
  for (std::size_t i = 0; i < m.carrier().size(); ++i) {
    sum += f.at(i) * m.weight(i);
  }
  return sum;
}

Rational mass(const Event& B, const SigmaFiniteMeasure& m) {
  require_same_carrier(B.carrier(), m.carrier(), "mass");
  Rational sum;
  for (std::size_t i = 0; i < m.carrier().size(); ++i) {
    if (B.contains(i)) sum += m.weight(i);
  }
  return sum;
}

SigmaFiniteMeasure scale(const SigmaFiniteMeasure& m, const Rational& c) {
  if (!c.is_positive()) {
    throw PreconditionError("scale factor must be positive, got " + c.str());
  }
  std::vector<Rational> weights(m.weights().size());
  for (std::size_t i = 0; i < weights.size(); ++i) weights[i] = m.weight(i) * c;
  return SigmaFiniteMeasure(m.carrier(), std::move(weights));
}

SigmaFiniteMeasure restrict_to(const SigmaFiniteMeasure& m, const Event& B) {
  require_same_carrier(B.carrier(), m.carrier(), "restrict_to");
  if (mass(B, m).is_zero()) {
    throw PreconditionError("restriction to " + B.str() + " yields the zero measure");
  }
  std::vector<Rational> weights(m.weights().size(), Rational(0));
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (B.contains(i)) weights[i] = m.weight(i);
  }
  return SigmaFiniteMeasure(m.carrier(), std::move(weights));
}

}  // namespace renyi
