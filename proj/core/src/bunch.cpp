#include "renyi/bunch.hpp"

#include <algorithm>
#include <set>

#include "renyi/error.hpp"

namespace renyi {

BunchReport validate_bunch(const Carrier& carrier, const std::vector<Event>& conditions) {
  BunchReport report;

  for (const auto& c : conditions) {
    require_same_carrier(c.carrier(), carrier, "validate_bunch");
    if (c.is_empty()) report.no_empty_member = false;
  }

  // Axiom 2: every pairwise union must already be a member.
  std::set<std::vector<bool>> members;
  for (const auto& c : conditions) members.insert(c.mask());
  for (std::size_t i = 0; i < conditions.size() && report.union_closed; ++i) {
    for (std::size_t j = i + 1; j < conditions.size(); ++j) {
      Event u = conditions[i] | conditions[j];
      if (!members.contains(u.mask())) {
        report.union_closed = false;
        report.missing_union = {conditions[i], conditions[j]};
        break;
      }
    }
  }

  // Axiom 3: the members jointly cover the carrier.
  std::vector<bool> covered(carrier.size(), false);
  for (const auto& c : conditions) {
    for (std::size_t a = 0; a < carrier.size(); ++a) {
      if (c.contains(a)) covered[a] = true;
    }
  }
  for (std::size_t a = 0; a < carrier.size(); ++a) {
    if (!covered[a]) {
      report.covers_carrier = false;
      report.uncovered_atoms.push_back(carrier.atom(a));
    }
  }

  return report;
}

namespace {

std::vector<Event> canonicalize(std::vector<Event> conditions) {
  std::sort(conditions.begin(), conditions.end(), Event::mask_less);
  conditions.erase(std::unique(conditions.begin(), conditions.end()), conditions.end());
  return conditions;
}

}  // namespace

Bunch::Bunch(Carrier carrier, std::vector<Event> conditions)
    : carrier_(std::move(carrier)), conditions_(canonicalize(std::move(conditions))) {
  BunchReport report = validate_bunch(carrier_, conditions_);
  if (!report.no_empty_member) {
    throw PreconditionError("bunch axiom 1 violated: the empty event is a member");
  }
  if (!report.union_closed) {
    throw PreconditionError("bunch axiom 2 violated: union of " +
                            report.missing_union->first.str() + " and " +
                            report.missing_union->second.str() + " is missing");
  }
  if (!report.covers_carrier) {
    throw PreconditionError("bunch axiom 3 violated: atom '" + report.uncovered_atoms.front() +
                            "' is not covered");
  }
}

Bunch::Bunch(trusted_t, Carrier carrier, std::vector<Event> conditions)
    : carrier_(std::move(carrier)), conditions_(canonicalize(std::move(conditions))) {}

std::optional<std::size_t> Bunch::find(const Event& condition) const {
  auto it = std::lower_bound(conditions_.begin(), conditions_.end(), condition, Event::mask_less);
  if (it != conditions_.end() && *it == condition) {
    return static_cast<std::size_t>(it - conditions_.begin());
  }
  return std::nullopt;
}

Bunch close_under_union(const Carrier& carrier, std::vector<Event> conditions) {
  std::vector<bool> covered(carrier.size(), false);
  for (const auto& c : conditions) {
    require_same_carrier(c.carrier(), carrier, "close_under_union");
    if (c.is_empty()) {
      throw PreconditionError("bunch axiom 1 violated: the empty event is a member");
    }
    for (std::size_t a = 0; a < carrier.size(); ++a) {
      if (c.contains(a)) covered[a] = true;
    }
  }
  for (std::size_t a = 0; a < carrier.size(); ++a) {
    if (!covered[a]) {
      throw PreconditionError("bunch axiom 3 violated: atom '" + carrier.atom(a) +
                              "' is not covered");
    }
  }

  // Closure: repeatedly add missing pairwise unions until a fixed point.
  std::set<std::vector<bool>> seen;
  for (const auto& c : conditions) seen.insert(c.mask());
  std::vector<Event> closed(conditions.begin(), conditions.end());
  for (std::size_t i = 0; i < closed.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      Event u = closed[i] | closed[j];
      if (seen.insert(u.mask()).second) closed.push_back(u);
    }
  }
  return Bunch(carrier, std::move(closed));
}

Bunch maximal_bunch(const RenyiState& P, std::uint64_t limit) {
  const Carrier& carrier = P.carrier();
  std::size_t n = carrier.size();
  if (n >= 64 || (std::uint64_t{1} << n) > limit) {
    throw PreconditionError(
        "carrier has " + std::to_string(n) +
        " atoms; enumerating 2^n events exceeds the limit - use "
        "is_elementary_condition as the membership predicate instead");
  }

  const auto& mu = P.representative();
  std::vector<Event> conditions;
  for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << n); ++bits) {
    std::vector<bool> mask(n, false);
    for (std::size_t a = 0; a < n; ++a) mask[a] = (bits >> a) & 1;
    Event candidate = Event::from_mask(carrier, std::move(mask));
    if (mass(candidate, mu).is_positive()) conditions.push_back(std::move(candidate));
  }
  // Axioms hold by construction: positive-mass events exclude the empty
  // event, a union of positive-mass events has positive mass, and any atom
  // joined with a positive-weight atom forms a positive-mass event.
  return Bunch(Bunch::trusted_t{}, carrier, std::move(conditions));
}

}  // namespace renyi
