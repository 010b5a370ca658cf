#pragma once

#include <optional>
#include <string>
#include <vector>

#include "renyi/bunch.hpp"
#include "renyi/disintegration.hpp"
#include "renyi/family.hpp"
#include "renyi/model.hpp"
#include "renyi/rational.hpp"
#include "renyi/truncation.hpp"

namespace renyi {

/// Output format of the command line reports. The JSON schema mirrors the
/// text report field for field; both render rationals exactly, with the
/// decimal form attached as presentation only.
enum class Format { text, json };

/// "1/2 (0.5)" - the exact value followed by its decimal rendering.
std::string fmt_rational(const Rational& r);

struct ConditionReport {
  std::string event;
  std::string given;
  Rational value;
};

struct ValidateReport {
  std::size_t atoms = 0;
  Rational total_mass;
  bool has_statistic = false;
  std::size_t events = 0;
  std::size_t functions = 0;
  std::optional<BunchReport> bunch;  // present when the model declares one
  std::size_t tables = 0;
};

struct CheckReport {
  BunchReport bunch;
  std::optional<ConsistencyReport> consistency;         // set when the bunch is valid
  std::optional<SigmaFiniteMeasure> reconstructed;      // set on successful reconstruction
  std::optional<std::string> reconstruction_error;      // set when reconstruction failed
  bool roundtrip_ok = false;                            // reconstructed state regenerates the tables
};

struct FactorizationEntry {
  std::string event;
  std::string given;
  FactorizationReport report;
};

struct DisintegrateReport {
  std::string nu_mode;
  ConditionalState state;
  std::vector<FactorizationEntry> factorizations;
};

std::string render_condition(const ConditionReport& report, Format format);
std::string render_validate(const ValidateReport& report, Format format);
std::string render_check(const CheckReport& report, Format format);
std::string render_disintegrate(const DisintegrateReport& report, Format format);
std::string render_posterior(const PosteriorReport& report, Format format);

}  // namespace renyi
