#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "renyi/bunch.hpp"
#include "renyi/family.hpp"
#include "renyi/state.hpp"
#include "renyi/statistic.hpp"

namespace renyi {

/// Declaration of a statistic inside a model file: the codomain atoms and,
/// for every carrier atom in order, the codomain label it maps to.
struct StatisticSpec {
  std::vector<std::string> codomain;
  std::vector<std::string> map;  // parallel to the carrier atoms

  bool operator==(const StatisticSpec&) const = default;
};

/// Parsed and validated content of a model file. Field order follows the
/// canonical file layout; vectors are normalized (full weight tables, event
/// members in carrier order), so equal models compare equal.
struct ModelSpec {
  std::vector<std::string> atoms;
  std::vector<Rational> weights;  // parallel to atoms
  std::optional<StatisticSpec> statistic;
  std::vector<std::pair<std::string, std::vector<std::string>>> events;     // name -> members
  std::vector<std::pair<std::string, std::vector<Rational>>> functions;     // name -> values
  std::optional<std::vector<std::string>> bunch;                            // event names
  std::vector<std::pair<std::string, std::vector<Rational>>> tables;        // event name -> table

  bool operator==(const ModelSpec&) const = default;
};

/// Parses the line-oriented model format and validates every reference and
/// every rational. Throws ParseError with a line or field location.
ModelSpec parse_model(std::string_view text);

/// Canonical serialization; parse_model(emit_model(m)) == m for every
/// validated spec.
std::string emit_model(const ModelSpec& spec);

/// A loaded model: the spec plus the core objects built from it.
///
/// The bunch and its tables stay in raw form here because bunch-axiom
/// violations are report content (validate_bunch), not loading errors.
class Model {
 public:
  explicit Model(ModelSpec spec);

  static Model from_text(std::string_view text) { return Model(parse_model(text)); }

  const ModelSpec& spec() const { return spec_; }
  const Carrier& carrier() const { return state_.carrier(); }
  const SigmaFiniteMeasure& measure() const { return state_.representative(); }
  const RenyiState& state() const { return state_; }

  bool has_statistic() const { return statistic_.has_value(); }
  const Statistic& statistic() const;

  /// Named event; the name "all" resolves to the full carrier unless the
  /// model declares its own event of that name.
  Event event(std::string_view name) const;

  /// A named function, or the indicator of a named event.
  NonNegFunction target(std::string_view name) const;

  bool has_bunch() const { return spec_.bunch.has_value(); }
  /// The bunch's events as declared (candidates for validate_bunch).
  std::vector<Event> bunch_events() const;

  bool has_tables() const { return !spec_.tables.empty(); }
  /// Builds the conditional family; requires the declared bunch to pass
  /// validate_bunch (throws PreconditionError otherwise).
  ConditionalFamily family() const;

 private:
  ModelSpec spec_;
  RenyiState state_;
  std::optional<Statistic> statistic_;
};

}  // namespace renyi
