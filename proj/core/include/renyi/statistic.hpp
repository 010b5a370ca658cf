#pragma once

#include <map>
#include <string>
#include <vector>

#include "renyi/carrier.hpp"
#include "renyi/event.hpp"
#include "renyi/function.hpp"
#include "renyi/measure.hpp"

namespace renyi {

/// Total mapping T : Ω → Ω_T between carriers; induces the pushforward
/// (image) measure P_T.
class Statistic {
 public:
  /// map[i] is the codomain index of domain atom i.
  Statistic(Carrier domain, Carrier codomain, std::vector<std::size_t> map);

  /// Builds from a label table; every domain atom must be mapped.
  static Statistic from_labels(Carrier domain, Carrier codomain,
                               const std::map<std::string, std::string>& map);

  static Statistic identity(Carrier carrier);

  const Carrier& domain() const { return domain_; }
  const Carrier& codomain() const { return codomain_; }
  std::size_t apply(std::size_t domain_index) const { return map_[domain_index]; }

  /// The fiber {ω : T(ω) = t}.
  Event fiber(std::size_t codomain_index) const;

  /// The preimage {T ∈ C}.
  Event preimage(const Event& C) const;

 private:
  Carrier domain_;
  Carrier codomain_;
  std::vector<std::size_t> map_;
};

/// s ∘ t, requiring t.codomain() == s.domain().
Statistic compose(const Statistic& s, const Statistic& t);

/// φ ∘ t as a function on the domain of t.
NonNegFunction compose(const NonNegFunction& phi, const Statistic& t);

/// Pushforward measure: weight at t is the total mass of the fiber over t.
SigmaFiniteMeasure pushforward(const SigmaFiniteMeasure& m, const Statistic& T);

}  // namespace renyi
