#include <doctest.h>

#include "generators.hpp"
#include "oracles.hpp"
#include "renyi/renyi.hpp"

using namespace renyi;

namespace {

Carrier abc() { return Carrier({"a", "b", "c"}); }

RenyiState state123() {
  return RenyiState(SigmaFiniteMeasure(abc(), {Rational(1), Rational(2), Rational(3)}));
}

}  // namespace

TEST_CASE("condition realizes the defining ratio") {
  Carrier die({"1", "2", "3", "4", "5", "6"});
  RenyiState fair(SigmaFiniteMeasure::counting(die));
  CHECK(condition(fair, Event(die, {"2", "4", "6"}), Event::full(die)) == Rational(1, 2));

  RenyiState p = state123();
  CHECK(condition(p, Event(abc(), {"a"}), Event(abc(), {"a", "b"})) == Rational(1, 3));

  RenyiState degenerate(SigmaFiniteMeasure(abc(), {Rational(1), Rational(2), Rational(0)}));
  CHECK_THROWS_AS(condition(degenerate, Event(abc(), {"a"}), Event(abc(), {"c"})),
                  PreconditionError);
}

TEST_CASE("elementary conditions have positive mass") {
  RenyiState p(SigmaFiniteMeasure(abc(), {Rational(1), Rational(0), Rational(3)}));
  CHECK_FALSE(is_elementary_condition(p, Event(abc(), {"b"})));
  CHECK(is_elementary_condition(p, Event::full(abc())));
  CHECK(is_elementary_condition(p, Event(abc(), {"a", "b"})));
}

TEST_CASE("states are equal up to one positive factor") {
  auto state = [](std::vector<Rational> w) {
    return RenyiState(SigmaFiniteMeasure(abc(), std::move(w)));
  };
  CHECK(states_equal(state({Rational(1), Rational(2), Rational(3)}),
                     state({Rational(2), Rational(4), Rational(6)})));
  CHECK_FALSE(states_equal(state({Rational(1), Rational(2), Rational(3)}),
                           state({Rational(1), Rational(2), Rational(4)})));

  // matching zero patterns are part of the class
  CHECK(states_equal(state({Rational(1), Rational(0), Rational(3)}),
                     state({Rational(2), Rational(0), Rational(6)})));
  CHECK_FALSE(states_equal(state({Rational(1), Rational(0), Rational(3)}),
                           state({Rational(1), Rational(1), Rational(3)})));

  CHECK_FALSE(states_equal(state({Rational(1), Rational(2), Rational(3)}),
                           RenyiState(SigmaFiniteMeasure(Carrier({"x", "y"}),
                                                         {Rational(1), Rational(2)}))));
}

TEST_CASE("conditioning is scale invariant") {
  testgen::Rng rng(20250803);
  for (int iter = 0; iter < 300; ++iter) {
    Carrier carrier = testgen::gen_carrier(rng);
    SigmaFiniteMeasure m = testgen::gen_measure(rng, carrier);
    Rational c = testgen::gen_positive_rational(rng);
    NonNegFunction a = testgen::gen_function(rng, carrier);
    Event b = testgen::gen_elementary_event(rng, m);

    RenyiState p(m);
    RenyiState scaled(scale(m, c));
    CHECK(states_equal(p, scaled));
    CHECK(condition(p, a, b) == condition(scaled, a, b));
    CHECK(condition(p, NonNegFunction::indicator(b), b) == Rational(1));
  }
}

TEST_CASE("the consistency relation holds for generated conditionals") {
  testgen::Rng rng(20250804);
  for (int iter = 0; iter < 300; ++iter) {
    Carrier carrier = testgen::gen_carrier(rng);
    SigmaFiniteMeasure m = testgen::gen_measure(rng, carrier);
    RenyiState p(m);
    Event b = testgen::gen_elementary_event(rng, m);
    Event c = b | testgen::gen_event(rng, carrier);  // B ⊆ C, both elementary
    NonNegFunction a = testgen::gen_function(rng, carrier);

    Rational lhs = condition(p, a, b);
    Rational rhs = condition(p, a * NonNegFunction::indicator(b), c) /
                   condition(p, NonNegFunction::indicator(b), c);
    CHECK(lhs == rhs);
  }
}
