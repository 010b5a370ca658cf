#include "renyi/statistic.hpp"

#include <numeric>

#include "renyi/error.hpp"

namespace renyi {

Statistic::Statistic(Carrier domain, Carrier codomain, std::vector<std::size_t> map)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), map_(std::move(map)) {
  if (map_.size() != domain_.size()) {
    throw Error("statistic map does not cover the domain");
  }
  for (std::size_t i = 0; i < map_.size(); ++i) {
    if (map_[i] >= codomain_.size()) {
      throw Error("statistic maps atom '" + domain_.atom(i) + "' outside the codomain");
    }
  }
}

Statistic Statistic::from_labels(Carrier domain, Carrier codomain,
                                 const std::map<std::string, std::string>& map) {
  std::vector<std::size_t> indices(domain.size());
  for (std::size_t i = 0; i < domain.size(); ++i) {
    auto it = map.find(domain.atom(i));
    if (it == map.end()) {
      throw Error("statistic leaves atom '" + domain.atom(i) + "' unmapped");
    }
    indices[i] = codomain.index_of(it->second);
  }
  return Statistic(std::move(domain), std::move(codomain), std::move(indices));
}

Statistic Statistic::identity(Carrier carrier) {
  std::vector<std::size_t> map(carrier.size());
  std::iota(map.begin(), map.end(), 0);
  return Statistic(carrier, carrier, std::move(map));
}

Event Statistic::fiber(std::size_t codomain_index) const {
  std::vector<bool> mask(domain_.size(), false);
  for (std::size_t i = 0; i < map_.size(); ++i) mask[i] = map_[i] == codomain_index;
  return Event::from_mask(domain_, std::move(mask));
}

Event Statistic::preimage(const Event& C) const {
  require_same_carrier(C.carrier(), codomain_, "preimage");
  std::vector<bool> mask(domain_.size(), false);
  for (std::size_t i = 0; i < map_.size(); ++i) mask[i] = C.contains(map_[i]);
  return Event::from_mask(domain_, std::move(mask));
}

Statistic compose(const Statistic& s, const Statistic& t) {
  require_same_carrier(t.codomain(), s.domain(), "statistic composition");
  std::vector<std::size_t> map(t.domain().size());
  for (std::size_t i = 0; i < map.size(); ++i) map[i] = s.apply(t.apply(i));
  return Statistic(t.domain(), s.codomain(), std::move(map));
}

NonNegFunction compose(const NonNegFunction& phi, const Statistic& t) {
  require_same_carrier(phi.carrier(), t.codomain(), "function composition");
  std::vector<Rational> values(t.domain().size());
  for (std::size_t i = 0; i < values.size(); ++i) values[i] = phi.at(t.apply(i));
  return NonNegFunction(t.domain(), std::move(values));
}

SigmaFiniteMeasure pushforward(const SigmaFiniteMeasure& m, const Statistic& T) {
  require_same_carrier(m.carrier(), T.domain(), "pushforward");
  std::vector<Rational> weights(T.codomain().size(), Rational(0));
  for (std::size_t i = 0; i < m.carrier().size(); ++i) {
    weights[T.apply(i)] += m.weight(i);
  }
  return SigmaFiniteMeasure(T.codomain(), std::move(weights));
}

}  // namespace renyi
