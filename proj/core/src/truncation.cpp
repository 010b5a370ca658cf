#include "renyi/truncation.hpp"

#include <cstdlib>
#include <map>
#include <sstream>

#include "renyi/error.hpp"
#include "renyi/state.hpp"

namespace renyi {

namespace {

long parse_integer(const std::string& text, int line, const char* field) {
  errno = 0;
  char* end = nullptr;
  long value = std::strtol(text.c_str(), &end, 10);
  if (errno != 0 || end == text.c_str() || *end != '\0') {
    throw ParseError(line, std::string(field) + ": malformed integer '" + text + "'");
  }
  return value;
}

ModelSpec kernel_window(long n, const std::map<long, Rational>& kernel, long data, long query) {
  long width = 0;
  for (const auto& [offset, weight] : kernel) width = std::max(width, std::labs(offset));

  ModelSpec spec;
  std::vector<std::string> query_members;
  std::vector<std::string> data_members;
  for (long theta = -n; theta <= n; ++theta) {
    for (long x = -n - width; x <= n + width; ++x) {
      std::string label = "t" + std::to_string(theta) + "_x" + std::to_string(x);
      spec.atoms.push_back(label);
      auto it = kernel.find(x - theta);
      spec.weights.push_back(it == kernel.end() ? Rational(0) : it->second);
      if (theta == query) query_members.push_back(label);
      if (x == data) data_members.push_back(label);
    }
  }
  spec.events.emplace_back("query", std::move(query_members));
  spec.events.emplace_back("data", std::move(data_members));
  return spec;
}

ModelSpec constant_window(long n, long query) {
  ModelSpec spec;
  std::vector<std::string> query_members;
  for (long theta = -n; theta <= n; ++theta) {
    std::string label = "t" + std::to_string(theta);
    spec.atoms.push_back(label);
    spec.weights.push_back(Rational(1));
    if (theta == query) query_members.push_back(label);
  }
  spec.events.emplace_back("query", std::move(query_members));
  spec.events.emplace_back("data", spec.atoms);  // the observation is uninformative
  return spec;
}

}  // namespace

TruncationFamily parse_family(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  int number = 0;
  std::string section;
  int family_line = 0;

  bool constant_likelihood = false;
  bool likelihood_seen = false;
  std::optional<long> data;
  std::optional<long> query;
  std::map<long, Rational> kernel;

  auto trim = [](const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return std::string();
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
  };

  while (std::getline(in, raw)) {
    ++number;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::string line = trim(raw);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') throw ParseError(number, "unterminated section header");
      section = trim(line.substr(1, line.size() - 2));
      if (section != "family" && section != "kernel") {
        throw ParseError(number, "unknown section [" + section + "] in family file");
      }
      if (section == "family") family_line = number;
      continue;
    }
    if (section.empty()) throw ParseError(number, "content before the first section");

    std::size_t eq = line.find('=');
    if (eq == std::string::npos) throw ParseError(number, "expected 'key = value'");
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));

    if (section == "family") {
      if (key == "likelihood") {
        if (likelihood_seen) throw ParseError(number, "duplicate likelihood declaration");
        likelihood_seen = true;
        if (value == "constant") {
          constant_likelihood = true;
        } else if (value != "kernel") {
          throw ParseError(number, "likelihood must be 'kernel' or 'constant'");
        }
      } else if (key == "data") {
        if (data) throw ParseError(number, "duplicate data declaration");
        data = parse_integer(value, number, "data");
      } else if (key == "query") {
        if (query) throw ParseError(number, "duplicate query declaration");
        query = parse_integer(value, number, "query");
      } else {
        throw ParseError(number, "unknown family key '" + key + "'");
      }
    } else {  // kernel
      long offset = parse_integer(key, number, "kernel offset");
      auto weight = Rational::parse(value);
      if (!weight) throw ParseError(number, "kernel: malformed rational '" + value + "'");
      if (!weight->is_positive()) {
        throw ParseError(number, "kernel weight at offset " + key + " must be positive");
      }
      if (!kernel.emplace(offset, *weight).second) {
        throw ParseError(number, "duplicate kernel offset " + key);
      }
    }
  }

  if (family_line == 0) throw ParseError("family file has no [family] section");
  if (!query) throw ParseError("family file does not declare a query");
  if (constant_likelihood) {
    if (!kernel.empty()) {
      throw ParseError("a constant likelihood admits no [kernel] section");
    }
    long q = *query;
    return TruncationFamily{[q](long n) { return constant_window(n, q); }};
  }
  if (kernel.empty()) throw ParseError("family file has an empty or missing [kernel] section");
  if (!data) throw ParseError("family file does not declare observed data");
  long d = *data;
  long q = *query;
  auto k = kernel;
  return TruncationFamily{[k, d, q](long n) { return kernel_window(n, k, d, q); }};
}

PosteriorReport run_posterior(const TruncationFamily& family, const std::vector<long>& windows) {
  PosteriorReport report;
  report.max_successive_diff = Rational(0);

  for (long n : windows) {
    if (n < 0) throw PreconditionError("window parameter must be nonnegative, got " +
                                       std::to_string(n));
    Model model(family.window(n));
    Event data = model.event(family.data_event);
    Event query = model.event(family.query_event);
    if (!is_elementary_condition(model.state(), data)) {
      throw PreconditionError("window N=" + std::to_string(n) +
                              ": the data event has zero mass");
    }
    report.points.push_back({n, condition(model.state(), query, data)});
  }

  for (std::size_t i = 1; i < report.points.size(); ++i) {
    Rational diff = abs(report.points[i].posterior - report.points[i - 1].posterior);
    if (diff > report.max_successive_diff) report.max_successive_diff = diff;
  }
  report.stabilized = !report.points.empty() && report.max_successive_diff.is_zero();
  return report;
}

}  // namespace renyi
