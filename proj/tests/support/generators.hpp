#pragma once

// Random-value generators for property tests. Every generator takes the RNG
// by reference so each test pins its own seed and stays reproducible.

#include <random>
#include <string>
#include <vector>

#include "renyi/renyi.hpp"

namespace testgen {

using Rng = std::mt19937_64;

inline std::size_t pick(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

inline bool coin(Rng& rng) { return pick(rng, 0, 1) == 1; }

inline renyi::Carrier gen_carrier(Rng& rng, std::size_t min_size = 1, std::size_t max_size = 10) {
  std::size_t n = pick(rng, min_size, max_size);
  std::vector<std::string> atoms;
  atoms.reserve(n);
  for (std::size_t i = 0; i < n; ++i) atoms.push_back("w" + std::to_string(i));
  return renyi::Carrier(std::move(atoms));
}

inline renyi::Rational gen_nonneg_rational(Rng& rng, long max_num = 8, long max_den = 8) {
  return renyi::Rational(static_cast<long>(pick(rng, 0, max_num)),
                         static_cast<long>(pick(rng, 1, max_den)));
}

inline renyi::Rational gen_positive_rational(Rng& rng, long max_num = 8, long max_den = 8) {
  return renyi::Rational(static_cast<long>(pick(rng, 1, max_num)),
                         static_cast<long>(pick(rng, 1, max_den)));
}

/// Random measure; some atoms may carry zero weight, at least one does not.
inline renyi::SigmaFiniteMeasure gen_measure(Rng& rng, const renyi::Carrier& carrier) {
  std::vector<renyi::Rational> weights(carrier.size());
  bool any_positive = false;
  for (auto& w : weights) {
    w = coin(rng) ? gen_nonneg_rational(rng) : renyi::Rational(0);
    any_positive = any_positive || w.is_positive();
  }
  if (!any_positive) weights[pick(rng, 0, weights.size() - 1)] = gen_positive_rational(rng);
  return renyi::SigmaFiniteMeasure(carrier, std::move(weights));
}

/// Random measure with strictly positive weight everywhere.
inline renyi::SigmaFiniteMeasure gen_positive_measure(Rng& rng, const renyi::Carrier& carrier) {
  std::vector<renyi::Rational> weights(carrier.size());
  for (auto& w : weights) w = gen_positive_rational(rng);
  return renyi::SigmaFiniteMeasure(carrier, std::move(weights));
}

/// Random probability measure (positive weights normalized to total 1).
inline renyi::SigmaFiniteMeasure gen_probability_measure(Rng& rng,
                                                         const renyi::Carrier& carrier) {
  renyi::SigmaFiniteMeasure m = gen_measure(rng, carrier);
  return scale(m, renyi::Rational(1) / m.total());
}

inline renyi::Event gen_event(Rng& rng, const renyi::Carrier& carrier) {
  std::vector<bool> mask(carrier.size());
  for (std::size_t i = 0; i < mask.size(); ++i) mask[i] = coin(rng);
  return renyi::Event::from_mask(carrier, std::move(mask));
}

/// Random event with positive mass under m (an elementary condition).
inline renyi::Event gen_elementary_event(Rng& rng, const renyi::SigmaFiniteMeasure& m) {
  std::vector<std::size_t> positive;
  for (std::size_t i = 0; i < m.carrier().size(); ++i) {
    if (m.weight(i).is_positive()) positive.push_back(i);
  }
  std::vector<bool> mask(m.carrier().size());
  for (std::size_t i = 0; i < mask.size(); ++i) mask[i] = coin(rng);
  mask[positive[pick(rng, 0, positive.size() - 1)]] = true;
  return renyi::Event::from_mask(m.carrier(), std::move(mask));
}

inline renyi::NonNegFunction gen_function(Rng& rng, const renyi::Carrier& carrier) {
  std::vector<renyi::Rational> values(carrier.size());
  for (auto& v : values) v = gen_nonneg_rational(rng);
  return renyi::NonNegFunction(carrier, std::move(values));
}

inline renyi::Statistic gen_statistic(Rng& rng, const renyi::Carrier& domain,
                                      std::size_t max_codomain = 5) {
  std::size_t nt = pick(rng, 1, max_codomain);
  std::vector<std::string> labels;
  labels.reserve(nt);
  for (std::size_t t = 0; t < nt; ++t) labels.push_back("v" + std::to_string(t));
  renyi::Carrier codomain(std::move(labels));
  std::vector<std::size_t> map(domain.size());
  for (auto& t : map) t = pick(rng, 0, nt - 1);
  return renyi::Statistic(domain, std::move(codomain), std::move(map));
}

/// Random bunch whose members all have positive mass under m: a few random
/// elementary events plus the full carrier, closed under union.
inline renyi::Bunch gen_bunch(Rng& rng, const renyi::SigmaFiniteMeasure& m) {
  std::vector<renyi::Event> base;
  std::size_t k = pick(rng, 1, 4);
  for (std::size_t i = 0; i < k; ++i) base.push_back(gen_elementary_event(rng, m));
  base.push_back(renyi::Event::full(m.carrier()));
  return close_under_union(m.carrier(), std::move(base));
}

/// The family generated from m over the bunch: table[B][a] = m(a)/m(B).
inline renyi::ConditionalFamily family_from_measure(const renyi::SigmaFiniteMeasure& m,
                                                    const renyi::Bunch& bunch) {
  std::vector<std::vector<renyi::Rational>> tables;
  tables.reserve(bunch.size());
  for (const auto& B : bunch.conditions()) {
    renyi::Rational total = mass(B, m);
    std::vector<renyi::Rational> table(m.carrier().size(), renyi::Rational(0));
    for (std::size_t a = 0; a < table.size(); ++a) {
      if (B.contains(a)) table[a] = m.weight(a) / total;
    }
    tables.push_back(std::move(table));
  }
  return renyi::ConditionalFamily(bunch, std::move(tables));
}

/// A measure, bunch and generated family arranged so that moving mass
/// between two atoms of one inner table must break consistency: the inner
/// condition is a proper subset of the full carrier and holds two atoms of
/// positive weight.
struct PerturbableSetup {
  renyi::SigmaFiniteMeasure measure;
  renyi::Bunch bunch;
  renyi::ConditionalFamily family;
  renyi::ConditionalFamily perturbed;
};

inline PerturbableSetup gen_perturbable_setup(Rng& rng) {
  for (;;) {
    renyi::Carrier carrier = gen_carrier(rng, 3, 10);
    renyi::SigmaFiniteMeasure m = gen_measure(rng, carrier);
    std::vector<std::size_t> positive;
    for (std::size_t i = 0; i < carrier.size(); ++i) {
      if (m.weight(i).is_positive()) positive.push_back(i);
    }
    if (positive.size() < 2) continue;

    // Inner condition: exactly two positive atoms; proper because the
    // carrier has a third atom.
    std::size_t p1 = positive[0];
    std::size_t p2 = positive[1];
    std::vector<bool> mask(carrier.size(), false);
    mask[p1] = mask[p2] = true;
    renyi::Event inner = renyi::Event::from_mask(carrier, mask);

    std::vector<renyi::Event> base{inner, renyi::Event::full(carrier)};
    std::size_t extra = pick(rng, 0, 2);
    for (std::size_t i = 0; i < extra; ++i) base.push_back(gen_elementary_event(rng, m));
    renyi::Bunch bunch = close_under_union(carrier, std::move(base));
    renyi::ConditionalFamily family = family_from_measure(m, bunch);

    std::size_t inner_index = *bunch.find(inner);
    std::vector<std::vector<renyi::Rational>> tables;
    for (std::size_t i = 0; i < bunch.size(); ++i) tables.push_back(family.table(i));
    renyi::Rational eps = tables[inner_index][p1] / renyi::Rational(2);
    tables[inner_index][p1] -= eps;
    tables[inner_index][p2] += eps;
    renyi::ConditionalFamily perturbed(bunch, std::move(tables));

    return PerturbableSetup{std::move(m), std::move(bunch), std::move(family),
                            std::move(perturbed)};
  }
}

}  // namespace testgen
