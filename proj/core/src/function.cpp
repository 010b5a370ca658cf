#include "renyi/function.hpp"

#include "renyi/error.hpp"

namespace renyi {

NonNegFunction::NonNegFunction(Carrier carrier, std::vector<Rational> values)
    : carrier_(std::move(carrier)), values_(std::move(values)) {
  if (values_.size() != carrier_.size()) {
    throw Error("function values do not cover the carrier");
  }
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (values_[i].is_negative()) {
      throw Error("negative value at atom '" + carrier_.atom(i) + "'");
    }
  }
}

NonNegFunction NonNegFunction::constant(Carrier carrier, const Rational& value) {
  std::vector<Rational> values(carrier.size(), value);
  return NonNegFunction(std::move(carrier), std::move(values));
}

NonNegFunction NonNegFunction::indicator(const Event& event) {
  std::vector<Rational> values(event.carrier().size(), Rational(0));
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (event.contains(i)) values[i] = Rational(1);
  }
  return NonNegFunction(event.carrier(), std::move(values));
}

NonNegFunction NonNegFunction::operator+(const NonNegFunction& other) const {
  require_same_carrier(carrier_, other.carrier_, "function sum");
  std::vector<Rational> values(values_.size());
  for (std::size_t i = 0; i < values_.size(); ++i) values[i] = values_[i] + other.values_[i];
  return NonNegFunction(carrier_, std::move(values));
}

NonNegFunction NonNegFunction::operator*(const NonNegFunction& other) const {
  require_same_carrier(carrier_, other.carrier_, "function product");
  std::vector<Rational> values(values_.size());
  for (std::size_t i = 0; i < values_.size(); ++i) values[i] = values_[i] * other.values_[i];
  return NonNegFunction(carrier_, std::move(values));
}

}  // namespace renyi
