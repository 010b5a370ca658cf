#pragma once

#include <vector>

#include "renyi/carrier.hpp"
#include "renyi/event.hpp"
#include "renyi/rational.hpp"

namespace renyi {

/// Total nonnegative rational-valued function on a carrier.
///
/// Events embed as their 0/1 indicators; on a finite carrier every such
/// function is bounded, so no extended values are needed.
class NonNegFunction {
 public:
  NonNegFunction(Carrier carrier, std::vector<Rational> values);

  static NonNegFunction constant(Carrier carrier, const Rational& value);
  static NonNegFunction indicator(const Event& event);

  const Carrier& carrier() const { return carrier_; }
  const std::vector<Rational>& values() const { return values_; }
  const Rational& at(std::size_t atom_index) const { return values_[atom_index]; }

  /// Pointwise sum.
  NonNegFunction operator+(const NonNegFunction& other) const;
  /// Pointwise product; f * indicator(B) realizes "A restricted to B".
  NonNegFunction operator*(const NonNegFunction& other) const;

  friend bool operator==(const NonNegFunction& a, const NonNegFunction& b) {
    return a.carrier_ == b.carrier_ && a.values_ == b.values_;
  }

 private:
  Carrier carrier_;
  std::vector<Rational> values_;
};

}  // namespace renyi
