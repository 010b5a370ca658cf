#pragma once

// Brute-force oracles, kept deliberately naive and independent of the
// library's computation paths.

#include <vector>

#include "renyi/renyi.hpp"

namespace oracle {

/// Plain summation Σ_ω f(ω)·m(ω).
inline renyi::Rational integrate(const renyi::NonNegFunction& f,
                                 const renyi::SigmaFiniteMeasure& m) {
  renyi::Rational sum;
  for (std::size_t i = 0; i < m.carrier().size(); ++i) sum += f.at(i) * m.weight(i);
  return sum;
}

/// Elementary conditional expectation E(A | T = t) by explicit fiber
/// enumeration: list the fiber, then form the ratio of plain sums.
inline renyi::Rational fiber_conditional(const renyi::SigmaFiniteMeasure& m,
                                         const renyi::Statistic& T,
                                         const renyi::NonNegFunction& A, std::size_t t) {
  std::vector<std::size_t> fiber;
  for (std::size_t i = 0; i < m.carrier().size(); ++i) {
    if (T.apply(i) == t) fiber.push_back(i);
  }
  renyi::Rational numerator, denominator;
  for (std::size_t i : fiber) {
    numerator += A.at(i) * m.weight(i);
    denominator += m.weight(i);
  }
  return numerator / denominator;  // caller guarantees positive fiber mass
}

/// P(A|B) as the literal ratio of two plain sums.
inline renyi::Rational ratio_condition(const renyi::SigmaFiniteMeasure& m,
                                       const renyi::Event& A, const renyi::Event& B) {
  renyi::Rational numerator, denominator;
  for (std::size_t i = 0; i < m.carrier().size(); ++i) {
    if (B.contains(i)) {
      denominator += m.weight(i);
      if (A.contains(i)) numerator += m.weight(i);
    }
  }
  return numerator / denominator;
}

}  // namespace oracle
