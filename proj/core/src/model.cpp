#include "renyi/model.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "renyi/error.hpp"

namespace renyi {

namespace {

std::string trim(std::string_view s) {
  std::size_t begin = s.find_first_not_of(" \t\r");
  if (begin == std::string_view::npos) return {};
  std::size_t end = s.find_last_not_of(" \t\r");
  return std::string(s.substr(begin, end - begin + 1));
}

std::vector<std::string> tokens(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

Rational parse_nonneg(const std::string& text, int line, const std::string& field) {
  auto r = Rational::parse(text);
  if (!r) throw ParseError(line, field + ": malformed rational '" + text + "'");
  if (r->is_negative()) throw ParseError(line, field + ": negative value " + r->str());
  return *r;
}

// "key = value" split; returns false when the line has no '='.
bool split_assignment(const std::string& line, std::string& key, std::string& value) {
  std::size_t eq = line.find('=');
  if (eq == std::string::npos) return false;
  key = trim(line.substr(0, eq));
  value = trim(line.substr(eq + 1));
  return true;
}

struct Section {
  int line;
  std::string kind;
  std::string arg;
  std::vector<std::pair<int, std::string>> body;  // (line number, text)
};

std::vector<Section> split_sections(std::string_view text) {
  std::vector<Section> sections;
  std::istringstream in{std::string(text)};
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::string line = trim(raw);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') throw ParseError(number, "unterminated section header");
      auto header = tokens(trim(line.substr(1, line.size() - 2)));
      if (header.empty()) throw ParseError(number, "empty section header");
      if (header.size() > 2) throw ParseError(number, "section header has too many tokens");
      sections.push_back({number, header[0], header.size() == 2 ? header[1] : "", {}});
    } else {
      if (sections.empty()) throw ParseError(number, "content before the first section");
      sections.back().body.emplace_back(number, line);
    }
  }
  return sections;
}

const std::vector<std::string>* find_event_members(const ModelSpec& spec,
                                                   const std::string& name) {
  for (const auto& [n, members] : spec.events) {
    if (n == name) return &members;
  }
  return nullptr;
}

}  // namespace

ModelSpec parse_model(std::string_view text) {
  auto sections = split_sections(text);
  if (sections.empty()) throw ParseError("model file has no sections");
  if (sections[0].kind != "carrier") {
    throw ParseError(sections[0].line, "the first section must be [carrier]");
  }

  ModelSpec spec;
  std::map<std::string, std::size_t> atom_index;
  std::set<std::string> names;  // event and function names share one namespace
  bool have_measure = false;

  auto atom_of = [&](const std::string& label, int line,
                     const std::string& field) -> std::size_t {
    auto it = atom_index.find(label);
    if (it == atom_index.end()) {
      throw ParseError(line, field + ": unknown atom '" + label + "'");
    }
    return it->second;
  };

  for (const auto& section : sections) {
    if (section.kind == "carrier") {
      if (!spec.atoms.empty()) throw ParseError(section.line, "duplicate [carrier] section");
      for (const auto& [line, body] : section.body) {
        for (auto& label : tokens(body)) {
          if (!atom_index.emplace(label, spec.atoms.size()).second) {
            throw ParseError(line, "duplicate atom '" + label + "' in carrier");
          }
          spec.atoms.push_back(label);
        }
      }
      if (spec.atoms.empty()) throw ParseError(section.line, "carrier declares no atoms");
      spec.weights.assign(spec.atoms.size(), Rational(0));

    } else if (section.kind == "measure") {
      if (have_measure) throw ParseError(section.line, "duplicate [measure] section");
      have_measure = true;
      std::set<std::string> seen;
      for (const auto& [line, body] : section.body) {
        std::string key, value;
        if (!split_assignment(body, key, value)) {
          throw ParseError(line, "expected 'atom = weight'");
        }
        if (!seen.insert(key).second) {
          throw ParseError(line, "duplicate measure entry for atom '" + key + "'");
        }
        spec.weights[atom_of(key, line, "measure")] =
            parse_nonneg(value, line, "measure weight for atom '" + key + "'");
      }

    } else if (section.kind == "statistic") {
      if (spec.statistic) throw ParseError(section.line, "duplicate [statistic] section");
      StatisticSpec stat;
      stat.map.assign(spec.atoms.size(), "");
      std::set<std::string> codomain_seen;
      for (const auto& [line, body] : section.body) {
        std::string key, value;
        if (!split_assignment(body, key, value)) {
          throw ParseError(line, "expected 'codomain = ...' or 'atom = label'");
        }
        if (key == "codomain") {
          if (!stat.codomain.empty()) throw ParseError(line, "duplicate codomain declaration");
          stat.codomain = tokens(value);
          if (stat.codomain.empty()) throw ParseError(line, "codomain declares no atoms");
          for (const auto& label : stat.codomain) {
            if (!codomain_seen.insert(label).second) {
              throw ParseError(line, "duplicate codomain atom '" + label + "'");
            }
          }
        } else {
          if (stat.codomain.empty()) {
            throw ParseError(line, "statistic section must declare its codomain first");
          }
          std::size_t i = atom_of(key, line, "statistic");
          if (!stat.map[i].empty()) {
            throw ParseError(line, "atom '" + key + "' is mapped twice");
          }
          if (!codomain_seen.contains(value)) {
            throw ParseError(line, "statistic: unknown codomain atom '" + value + "'");
          }
          stat.map[i] = value;
        }
      }
      if (stat.codomain.empty()) throw ParseError(section.line, "statistic has no codomain");
      for (std::size_t i = 0; i < stat.map.size(); ++i) {
        if (stat.map[i].empty()) {
          throw ParseError(section.line, "statistic leaves atom '" + spec.atoms[i] + "' unmapped");
        }
      }
      spec.statistic = std::move(stat);

    } else if (section.kind == "event" || section.kind == "function") {
      if (section.arg.empty()) {
        throw ParseError(section.line, "[" + section.kind + "] needs a name");
      }
      if (!names.insert(section.arg).second) {
        throw ParseError(section.line, "name '" + section.arg + "' is already declared");
      }
      if (section.kind == "event") {
        std::vector<bool> mask(spec.atoms.size(), false);
        for (const auto& [line, body] : section.body) {
          for (auto& label : tokens(body)) {
            mask[atom_of(label, line, "event '" + section.arg + "'")] = true;
          }
        }
        std::vector<std::string> members;
        for (std::size_t i = 0; i < mask.size(); ++i) {
          if (mask[i]) members.push_back(spec.atoms[i]);
        }
        spec.events.emplace_back(section.arg, std::move(members));
      } else {
        std::vector<Rational> values(spec.atoms.size(), Rational(0));
        std::set<std::string> seen;
        for (const auto& [line, body] : section.body) {
          std::string key, value;
          if (!split_assignment(body, key, value)) {
            throw ParseError(line, "expected 'atom = value'");
          }
          if (!seen.insert(key).second) {
            throw ParseError(line, "duplicate entry for atom '" + key + "'");
          }
          values[atom_of(key, line, "function '" + section.arg + "'")] =
              parse_nonneg(value, line, "function '" + section.arg + "' at atom '" + key + "'");
        }
        spec.functions.emplace_back(section.arg, std::move(values));
      }

    } else if (section.kind == "bunch") {
      if (spec.bunch) throw ParseError(section.line, "duplicate [bunch] section");
      std::vector<std::string> entries;
      std::set<std::string> seen;
      for (const auto& [line, body] : section.body) {
        for (auto& name : tokens(body)) {
          if (name != "all" && !find_event_members(spec, name)) {
            throw ParseError(line, "bunch references undeclared event '" + name + "'");
          }
          if (!seen.insert(name).second) {
            throw ParseError(line, "duplicate event '" + name + "' in bunch");
          }
          entries.push_back(name);
        }
      }
      spec.bunch = std::move(entries);

    } else if (section.kind == "table") {
      if (section.arg.empty()) throw ParseError(section.line, "[table] needs an event name");
      if (!spec.bunch) {
        throw ParseError(section.line, "[table] sections must follow the [bunch] section");
      }
      const auto& bunch = *spec.bunch;
      if (std::find(bunch.begin(), bunch.end(), section.arg) == bunch.end()) {
        throw ParseError(section.line,
                         "table event '" + section.arg + "' is not in the bunch");
      }
      for (const auto& [name, values] : spec.tables) {
        if (name == section.arg) {
          throw ParseError(section.line, "duplicate table for event '" + section.arg + "'");
        }
      }
      std::vector<bool> mask(spec.atoms.size(), section.arg == "all");
      if (const auto* members = find_event_members(spec, section.arg)) {
        mask.assign(spec.atoms.size(), false);
        for (const auto& label : *members) mask[atom_index.at(label)] = true;
      }
      std::vector<Rational> values(spec.atoms.size(), Rational(0));
      std::set<std::string> seen;
      Rational sum;
      for (const auto& [line, body] : section.body) {
        std::string key, value;
        if (!split_assignment(body, key, value)) {
          throw ParseError(line, "expected 'atom = probability'");
        }
        if (!seen.insert(key).second) {
          throw ParseError(line, "duplicate entry for atom '" + key + "'");
        }
        std::size_t i = atom_of(key, line, "table '" + section.arg + "'");
        if (!mask[i]) {
          throw ParseError(line, "table '" + section.arg + "' has mass outside its event at '" +
                                     key + "'");
        }
        values[i] = parse_nonneg(value, line, "table '" + section.arg + "' at atom '" + key + "'");
        sum += values[i];
      }
      if (sum != Rational(1)) {
        throw ParseError(section.line,
                         "table '" + section.arg + "' sums to " + sum.str() + ", expected 1");
      }
      spec.tables.emplace_back(section.arg, std::move(values));

    } else {
      throw ParseError(section.line, "unknown section [" + section.kind + "]");
    }
  }

  if (!have_measure) throw ParseError("model file has no [measure] section");
  bool any_positive = false;
  for (const auto& w : spec.weights) any_positive = any_positive || w.is_positive();
  if (!any_positive) throw ParseError("measure is identically zero");

  if (!spec.tables.empty()) {
    for (const auto& name : *spec.bunch) {
      bool found = false;
      for (const auto& [n, values] : spec.tables) found = found || n == name;
      if (!found) throw ParseError("missing table for bunch event '" + name + "'");
    }
  }

  return spec;
}

std::string emit_model(const ModelSpec& spec) {
  std::ostringstream out;

  out << "[carrier]\n";
  for (std::size_t i = 0; i < spec.atoms.size(); ++i) {
    out << (i ? " " : "") << spec.atoms[i];
  }
  out << "\n";

  out << "\n[measure]\n";
  for (std::size_t i = 0; i < spec.atoms.size(); ++i) {
    if (!spec.weights[i].is_zero()) {
      out << spec.atoms[i] << " = " << spec.weights[i].str() << "\n";
    }
  }

  if (spec.statistic) {
    out << "\n[statistic]\ncodomain =";
    for (const auto& label : spec.statistic->codomain) out << " " << label;
    out << "\n";
    for (std::size_t i = 0; i < spec.atoms.size(); ++i) {
      out << spec.atoms[i] << " = " << spec.statistic->map[i] << "\n";
    }
  }

  for (const auto& [name, members] : spec.events) {
    out << "\n[event " << name << "]\n";
    for (std::size_t i = 0; i < members.size(); ++i) {
      out << (i ? " " : "") << members[i];
    }
    if (!members.empty()) out << "\n";
  }

  for (const auto& [name, values] : spec.functions) {
    out << "\n[function " << name << "]\n";
    for (std::size_t i = 0; i < spec.atoms.size(); ++i) {
      if (!values[i].is_zero()) {
        out << spec.atoms[i] << " = " << values[i].str() << "\n";
      }
    }
  }

  if (spec.bunch) {
    out << "\n[bunch]\n";
    for (std::size_t i = 0; i < spec.bunch->size(); ++i) {
      out << (i ? " " : "") << (*spec.bunch)[i];
    }
    if (!spec.bunch->empty()) out << "\n";
  }

  for (const auto& [name, values] : spec.tables) {
    out << "\n[table " << name << "]\n";
    for (std::size_t i = 0; i < spec.atoms.size(); ++i) {
      if (!values[i].is_zero()) {
        out << spec.atoms[i] << " = " << values[i].str() << "\n";
      }
    }
  }

  return out.str();
}

Model::Model(ModelSpec spec)
    : spec_(std::move(spec)),
      state_(SigmaFiniteMeasure(Carrier(spec_.atoms), spec_.weights)) {
  if (spec_.statistic) {
    Carrier codomain(spec_.statistic->codomain);
    std::map<std::string, std::string> map;
    for (std::size_t i = 0; i < spec_.atoms.size(); ++i) {
      map[spec_.atoms[i]] = spec_.statistic->map[i];
    }
    statistic_ = Statistic::from_labels(carrier(), std::move(codomain), map);
  }
}

const Statistic& Model::statistic() const {
  if (!statistic_) throw PreconditionError("model declares no statistic");
  return *statistic_;
}

Event Model::event(std::string_view name) const {
  if (const auto* members = find_event_members(spec_, std::string(name))) {
    return Event(carrier(), *members);
  }
  if (name == "all") return Event::full(carrier());
  throw Error("unknown event '" + std::string(name) + "'");
}

NonNegFunction Model::target(std::string_view name) const {
  for (const auto& [n, values] : spec_.functions) {
    if (n == name) return NonNegFunction(carrier(), values);
  }
  return NonNegFunction::indicator(event(name));
}

std::vector<Event> Model::bunch_events() const {
  if (!spec_.bunch) throw PreconditionError("model declares no bunch");
  std::vector<Event> events;
  events.reserve(spec_.bunch->size());
  for (const auto& name : *spec_.bunch) events.push_back(event(name));
  return events;
}

ConditionalFamily Model::family() const {
  if (!has_bunch() || !has_tables()) {
    throw PreconditionError("model declares no conditional-family tables");
  }
  auto candidates = bunch_events();
  BunchReport report = validate_bunch(carrier(), candidates);
  if (!report.ok()) {
    throw PreconditionError("bunch does not satisfy the axioms; run validate_bunch for details");
  }
  Bunch bunch(carrier(), candidates);
  std::vector<std::pair<Event, std::vector<Rational>>> tables;
  tables.reserve(spec_.tables.size());
  for (const auto& [name, values] : spec_.tables) {
    tables.emplace_back(event(name), values);
  }
  return ConditionalFamily(std::move(bunch), tables);
}

}  // namespace renyi
