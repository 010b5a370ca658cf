#include <doctest.h>

#include "generators.hpp"
#include "oracles.hpp"
#include "renyi/renyi.hpp"

using namespace renyi;

namespace {

Carrier abc() { return Carrier({"a", "b", "c"}); }

SigmaFiniteMeasure m123() {
  return SigmaFiniteMeasure(abc(), {Rational(1), Rational(2), Rational(3)});
}

}  // namespace

TEST_CASE("carrier basics") {
  Carrier c = abc();
  CHECK(c.size() == 3);
  CHECK(c.index_of("b") == 1);
  CHECK_FALSE(c.find("z").has_value());
  CHECK_THROWS_AS(c.index_of("z"), Error);
  CHECK_THROWS_AS(Carrier({}), Error);
  CHECK_THROWS_AS(Carrier({"a", "a"}), Error);
  CHECK(c == Carrier({"a", "b", "c"}));
  CHECK(c != Carrier({"a", "b"}));
}

TEST_CASE("events are subsets with set algebra") {
  Carrier c = abc();
  Event ab(c, {"a", "b"});
  Event bc(c, {"b", "c"});
  CHECK((ab | bc) == Event::full(c));
  CHECK((ab & bc) == Event(c, {"b"}));
  CHECK(ab.complement() == Event(c, {"c"}));
  CHECK(Event(c, {"b"}).subset_of(ab));
  CHECK_FALSE(ab.subset_of(bc));
  CHECK(Event::empty(c).is_empty());
  CHECK(Event::empty(c).subset_of(ab));
  CHECK(ab.str() == "{a b}");
  CHECK_THROWS_AS(Event(c, {"z"}), Error);
}

TEST_CASE("functions are total and nonnegative") {
  Carrier c = abc();
  CHECK_THROWS_AS(NonNegFunction(c, {Rational(1), Rational(-1), Rational(0)}), Error);
  CHECK_THROWS_AS(NonNegFunction(c, {Rational(1)}), Error);
  NonNegFunction f = NonNegFunction::indicator(Event(c, {"a"}));
  CHECK(f.at(0) == Rational(1));
  CHECK(f.at(1) == Rational(0));
}

TEST_CASE("the zero measure is rejected") {
  CHECK_THROWS_AS(SigmaFiniteMeasure(abc(), {Rational(0), Rational(0), Rational(0)}), Error);
  CHECK_THROWS_AS(SigmaFiniteMeasure(abc(), {Rational(1), Rational(-1), Rational(1)}), Error);
}

TEST_CASE("integrate") {
  SigmaFiniteMeasure m = m123();
  CHECK(integrate(NonNegFunction::constant(abc(), Rational(1)), m) == Rational(6));
  CHECK(integrate(NonNegFunction::constant(abc(), Rational(0)), m) == Rational(0));
  CHECK(integrate(NonNegFunction::indicator(Event(abc(), {"a"})), m) == Rational(1));

  Carrier other({"x", "y"});
  CHECK_THROWS_AS(integrate(NonNegFunction::constant(other, Rational(1)), m),
                  CarrierMismatchError);
}

TEST_CASE("mass") {
  Carrier die({"1", "2", "3", "4", "5", "6"});
  SigmaFiniteMeasure counting = SigmaFiniteMeasure::counting(die);
  CHECK(mass(Event(die, {"2", "4", "6"}), counting) == Rational(3));
  CHECK(mass(Event::empty(die), counting) == Rational(0));
  CHECK(mass(Event::full(abc()), m123()) == Rational(6));
}

TEST_CASE("scale") {
  SigmaFiniteMeasure m = m123();
  SigmaFiniteMeasure doubled = scale(m, Rational(2));
  CHECK(doubled.weights() == std::vector<Rational>{Rational(2), Rational(4), Rational(6)});
  CHECK(scale(m, Rational(1)) == m);

  Carrier die({"1", "2", "3", "4", "5", "6"});
  SigmaFiniteMeasure uniform = scale(SigmaFiniteMeasure::counting(die), Rational(1, 6));
  CHECK(uniform.total() == Rational(1));

  CHECK_THROWS_AS(scale(m, Rational(0)), PreconditionError);
  CHECK_THROWS_AS(scale(m, Rational(-1)), PreconditionError);
}

TEST_CASE("restrict_to") {
  SigmaFiniteMeasure m = m123();
  SigmaFiniteMeasure r = restrict_to(m, Event(abc(), {"a", "b"}));
  CHECK(r.weights() == std::vector<Rational>{Rational(1), Rational(2), Rational(0)});
  CHECK(restrict_to(m, Event::full(abc())) == m);

  SigmaFiniteMeasure with_zero(abc(), {Rational(1), Rational(2), Rational(0)});
  CHECK_THROWS_AS(restrict_to(with_zero, Event(abc(), {"c"})), PreconditionError);
}

TEST_CASE("pushforward") {
  Carrier die({"1", "2", "3", "4", "5", "6"});
  Carrier parity_codomain({"even", "odd"});
  Statistic parity = Statistic::from_labels(die, parity_codomain,
                                            {{"1", "odd"},
                                             {"2", "even"},
                                             {"3", "odd"},
                                             {"4", "even"},
                                             {"5", "odd"},
                                             {"6", "even"}});
  SigmaFiniteMeasure counting = SigmaFiniteMeasure::counting(die);
  SigmaFiniteMeasure p_t = pushforward(counting, parity);
  CHECK(p_t.weight(parity_codomain.index_of("even")) == Rational(3));
  CHECK(p_t.weight(parity_codomain.index_of("odd")) == Rational(3));

  CHECK(pushforward(m123(), Statistic::identity(abc())) == m123());

  Carrier point({"p"});
  Statistic collapse(abc(), point, {0, 0, 0});
  CHECK(pushforward(m123(), collapse).weight(0) == Rational(6));
}

TEST_CASE("integration properties over random inputs") {
  testgen::Rng rng(20250801);
  for (int iter = 0; iter < 200; ++iter) {
    Carrier carrier = testgen::gen_carrier(rng);
    SigmaFiniteMeasure m = testgen::gen_measure(rng, carrier);
    NonNegFunction f = testgen::gen_function(rng, carrier);
    NonNegFunction g = testgen::gen_function(rng, carrier);

    // additivity in the integrand
    CHECK(integrate(f + g, m) == integrate(f, m) + integrate(g, m));

    // homogeneity in the measure
    Rational c = testgen::gen_positive_rational(rng);
    CHECK(integrate(f, scale(m, c)) == c * integrate(f, m));

    // finite additivity of mass over disjoint events
    Event b = testgen::gen_event(rng, carrier);
    Event d = testgen::gen_event(rng, carrier) & b.complement();
    CHECK(mass(b | d, m) == mass(b, m) + mass(d, m));
  }
}

TEST_CASE("pushforward preserves mass and composes") {
  testgen::Rng rng(20250802);
  for (int iter = 0; iter < 200; ++iter) {
    Carrier carrier = testgen::gen_carrier(rng);
    SigmaFiniteMeasure m = testgen::gen_measure(rng, carrier);
    Statistic t = testgen::gen_statistic(rng, carrier);
    SigmaFiniteMeasure image = pushforward(m, t);
    CHECK(image.total() == m.total());

    Statistic s = testgen::gen_statistic(rng, t.codomain());
    CHECK(pushforward(image, s) == pushforward(m, compose(s, t)));
  }
}
