#include <doctest.h>

#include "generators.hpp"
#include "renyi/renyi.hpp"

using namespace renyi;

namespace {

Carrier ab() { return Carrier({"a", "b"}); }

}  // namespace

TEST_CASE("validate_bunch reports each axiom with a witness") {
  Carrier c = ab();
  Event a(c, {"a"});
  Event b(c, {"b"});
  Event full = Event::full(c);

  SUBCASE("all axioms pass") {
    BunchReport report = validate_bunch(c, {a, b, full});
    CHECK(report.ok());
  }
  SUBCASE("missing union violates axiom 2") {
    BunchReport report = validate_bunch(c, {a, b});
    CHECK_FALSE(report.ok());
    CHECK(report.no_empty_member);
    CHECK_FALSE(report.union_closed);
    REQUIRE(report.missing_union.has_value());
    CHECK(report.missing_union->first == a);
    CHECK(report.missing_union->second == b);
    CHECK(report.covers_carrier);
  }
  SUBCASE("empty member violates axiom 1") {
    BunchReport report = validate_bunch(c, {Event::empty(c), full});
    CHECK_FALSE(report.no_empty_member);
    CHECK(report.union_closed);
    CHECK(report.covers_carrier);
  }
  SUBCASE("cover failure violates axiom 3") {
    BunchReport report = validate_bunch(c, {a});
    CHECK_FALSE(report.covers_carrier);
    CHECK(report.uncovered_atoms == std::vector<std::string>{"b"});
  }
}

TEST_CASE("Bunch construction enforces the axioms") {
  Carrier c = ab();
  CHECK_THROWS_AS(Bunch(c, {Event(c, {"a"}), Event(c, {"b"})}), PreconditionError);
  Bunch valid(c, {Event(c, {"a"}), Event(c, {"b"}), Event::full(c)});
  CHECK(valid.size() == 3);
  CHECK(valid.find(Event(c, {"a"})).has_value());
  CHECK_FALSE(valid.find(Event::empty(c)).has_value());
}

TEST_CASE("close_under_union") {
  Carrier c = ab();
  Event a(c, {"a"});
  Event b(c, {"b"});

  Bunch closed = close_under_union(c, {a, b});
  CHECK(closed.size() == 3);
  CHECK(closed.find(Event::full(c)).has_value());

  // already closed input is a fixed point
  Bunch again = close_under_union(c, {a, b, Event::full(c)});
  CHECK(again.conditions() == closed.conditions());

  CHECK_THROWS_AS(close_under_union(c, {a}), PreconditionError);         // no cover
  CHECK_THROWS_AS(close_under_union(c, {Event::empty(c), Event::full(c)}),
                  PreconditionError);                                    // empty member
}

TEST_CASE("maximal_bunch enumerates all positive-mass events") {
  Carrier c = ab();

  RenyiState uniform(SigmaFiniteMeasure(c, {Rational(1), Rational(1)}));
  Bunch all = maximal_bunch(uniform, 1 << 10);
  CHECK(all.size() == 3);  // {a}, {b}, {a b}

  RenyiState degenerate(SigmaFiniteMeasure(c, {Rational(1), Rational(0)}));
  Bunch partial = maximal_bunch(degenerate, 1 << 10);
  CHECK(partial.size() == 2);  // {a}, {a b}
  CHECK_FALSE(partial.find(Event(c, {"b"})).has_value());

  std::vector<std::string> atoms;
  for (int i = 0; i < 40; ++i) atoms.push_back("w" + std::to_string(i));
  Carrier big(atoms);
  RenyiState big_state(SigmaFiniteMeasure::counting(big));
  CHECK_THROWS_AS(maximal_bunch(big_state, std::uint64_t{1} << 20), PreconditionError);
}

TEST_CASE("maximal_bunch always satisfies the axioms") {
  testgen::Rng rng(20250805);
  for (int iter = 0; iter < 100; ++iter) {
    Carrier carrier = testgen::gen_carrier(rng, 1, 6);
    SigmaFiniteMeasure m = testgen::gen_measure(rng, carrier);
    Bunch bunch = maximal_bunch(RenyiState(m), std::uint64_t{1} << 20);
    CHECK(validate_bunch(carrier, bunch.conditions()).ok());
    for (const auto& b : bunch.conditions()) {
      CHECK(mass(b, m).is_positive());
    }
  }
}
