#include "renyi/family.hpp"

#include <algorithm>

#include "renyi/error.hpp"

namespace renyi {

ConditionalFamily::ConditionalFamily(Bunch bunch, std::vector<std::vector<Rational>> tables)
    : bunch_(std::move(bunch)), tables_(std::move(tables)) {
  if (tables_.size() != bunch_.size()) {
    throw Error("family has " + std::to_string(tables_.size()) + " tables for " +
                std::to_string(bunch_.size()) + " conditions");
  }
  const Carrier& carrier = bunch_.carrier();
  for (std::size_t i = 0; i < tables_.size(); ++i) {
    const Event& B = bunch_.conditions()[i];
    const auto& table = tables_[i];
    if (table.size() != carrier.size()) {
      throw Error("table for " + B.str() + " does not cover the carrier");
    }
    Rational sum;
    for (std::size_t a = 0; a < table.size(); ++a) {
      if (table[a].is_negative()) {
        throw Error("table for " + B.str() + " is negative at atom '" + carrier.atom(a) + "'");
      }
      if (!B.contains(a) && !table[a].is_zero()) {
        throw Error("table for " + B.str() + " has mass outside the condition at atom '" +
                    carrier.atom(a) + "'");
      }
      sum += table[a];
    }
    if (sum != Rational(1)) {
      throw Error("table for " + B.str() + " sums to " + sum.str() + ", expected 1");
    }
  }
}

ConditionalFamily::ConditionalFamily(
    Bunch bunch, const std::vector<std::pair<Event, std::vector<Rational>>>& tables)
    : ConditionalFamily(bunch, [&] {
        std::vector<std::vector<Rational>> aligned(bunch.size());
        std::vector<bool> filled(bunch.size(), false);
        for (const auto& [condition, table] : tables) {
          auto i = bunch.find(condition);
          if (!i) throw Error("table condition " + condition.str() + " is not in the bunch");
          if (filled[*i]) throw Error("duplicate table for condition " + condition.str());
          aligned[*i] = table;
          filled[*i] = true;
        }
        for (std::size_t i = 0; i < filled.size(); ++i) {
          if (!filled[i]) {
            throw Error("missing table for condition " + bunch.conditions()[i].str());
          }
        }
        return aligned;
      }()) {}

Rational ConditionalFamily::prob(const Event& A, std::size_t condition_index) const {
  require_same_carrier(A.carrier(), carrier(), "family prob");
  Rational sum;
  const auto& table = tables_[condition_index];
  for (std::size_t a = 0; a < table.size(); ++a) {
    if (A.contains(a)) sum += table[a];
  }
  return sum;
}

ConsistencyReport check_consistency(const ConditionalFamily& F) {
  ConsistencyReport report;
  const auto& conditions = F.bunch().conditions();
  const Carrier& carrier = F.carrier();

  for (std::size_t i = 0; i < conditions.size(); ++i) {
    for (std::size_t j = 0; j < conditions.size(); ++j) {
      if (i == j || !conditions[i].subset_of(conditions[j])) continue;
      ++report.nested_pairs_checked;

      // P(B|C); the relation only constrains pairs where it is positive.
      Rational b_given_c = F.prob(conditions[i], j);
      if (b_given_c.is_zero()) continue;

      for (std::size_t a = 0; a < carrier.size(); ++a) {
        if (!conditions[i].contains(a)) continue;
        Rational lhs = F.table(i)[a];
        Rational rhs = F.table(j)[a] / b_given_c;
        if (lhs != rhs) {
          report.consistent = false;
          report.violation = ConsistencyViolation{carrier.atom(a), conditions[i], conditions[j],
                                                  std::move(lhs), std::move(rhs)};
          return report;
        }
      }
    }
  }
  return report;
}

RenyiState reconstruct(const ConditionalFamily& F) {
  const auto& conditions = F.bunch().conditions();
  const Carrier& carrier = F.carrier();
  const std::size_t k = conditions.size();

  // Precondition: every condition has positive probability relative to any
  // union containing it, otherwise relative scales are undefined.
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      Event u = conditions[i] | conditions[j];
      auto ui = F.bunch().find(u);
      if (!ui) throw Error("bunch is not union closed");  // unreachable: Bunch invariant
      if (F.prob(conditions[i], *ui).is_zero()) {
        throw PreconditionError("degenerate pair: P(" + conditions[i].str() + " | " + u.str() +
                                ") = 0, scale propagation is undefined");
      }
    }
  }

  // Unknown scales λ_B with μ(a) = λ_B·P({a}|B) on each condition B. For
  // nested B ⊆ C the tables force λ_B = P(B|C)·λ_C; any two conditions are
  // linked through their union, so propagating over nested pairs reaches
  // every condition from the reference one.
  std::vector<std::optional<Rational>> lambda(k);
  lambda[0] = Rational(1);  // canonically first condition is the reference
  bool progress = true;
  while (progress) {
    progress = false;
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        if (i == j || !conditions[i].subset_of(conditions[j])) continue;
        if (lambda[i] && !lambda[j]) {
          lambda[j] = *lambda[i] / F.prob(conditions[i], j);
          progress = true;
        } else if (!lambda[i] && lambda[j]) {
          lambda[i] = F.prob(conditions[i], j) * *lambda[j];
          progress = true;
        }
      }
    }
  }
  for (std::size_t i = 0; i < k; ++i) {
    if (!lambda[i]) throw Error("scale propagation did not reach " + conditions[i].str());
  }

  // Assemble μ from the first condition containing each atom.
  std::vector<Rational> weights(carrier.size(), Rational(0));
  std::vector<std::optional<std::size_t>> source(carrier.size());
  for (std::size_t a = 0; a < carrier.size(); ++a) {
    for (std::size_t i = 0; i < k; ++i) {
      if (conditions[i].contains(a)) {
        weights[a] = *lambda[i] * F.table(i)[a];
        source[a] = i;
        break;
      }
    }
    // axiom 3 guarantees source[a] is set
  }

  // Verify every constraint: the assembled weights must agree with every
  // table, and every nested pair must reproduce its relative scale.
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t a = 0; a < carrier.size(); ++a) {
      if (!conditions[i].contains(a)) continue;
      if (weights[a] != *lambda[i] * F.table(i)[a]) {
        throw NotRepresentableError(
            "family not representable: tables for " + conditions[*source[a]].str() + " and " +
            conditions[i].str() + " disagree on atom '" + carrier.atom(a) + "'");
      }
    }
  }
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      Event u = conditions[i] | conditions[j];
      std::size_t ui = *F.bunch().find(u);
      if (*lambda[i] != F.prob(conditions[i], ui) * *lambda[ui]) {
        throw NotRepresentableError("family not representable: scales of " +
                                    conditions[i].str() + " and " + u.str() + " conflict");
      }
    }
  }

  return RenyiState(SigmaFiniteMeasure(carrier, std::move(weights)));
}

}  // namespace renyi
