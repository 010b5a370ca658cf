#include "renyi/report.hpp"

#include <nlohmann/json.hpp>
#include <sstream>

namespace renyi {

using ordered_json = nlohmann::ordered_json;

std::string fmt_rational(const Rational& r) {
  return r.str() + " (" + r.decimal() + ")";
}

namespace {

ordered_json json_rational(const Rational& r) {
  return ordered_json{{"exact", r.str()}, {"decimal", r.decimal()}};
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

// Measure table rendered as nonzero entries in atom order.
void text_measure_table(std::ostringstream& out, const SigmaFiniteMeasure& m) {
  for (std::size_t i = 0; i < m.carrier().size(); ++i) {
    if (!m.weight(i).is_zero()) {
      out << "  " << m.carrier().atom(i) << " = " << fmt_rational(m.weight(i)) << "\n";
    }
  }
}

ordered_json json_measure_table(const SigmaFiniteMeasure& m) {
  ordered_json table = ordered_json::object();
  for (std::size_t i = 0; i < m.carrier().size(); ++i) {
    if (!m.weight(i).is_zero()) table[m.carrier().atom(i)] = json_rational(m.weight(i));
  }
  return table;
}

void text_bunch_report(std::ostringstream& out, const BunchReport& b) {
  out << "  axiom 1 (no empty member): " << (b.no_empty_member ? "ok" : "VIOLATED") << "\n";
  out << "  axiom 2 (union closed): " << (b.union_closed ? "ok" : "VIOLATED");
  if (b.missing_union) {
    out << " (union of " << b.missing_union->first.str() << " and "
        << b.missing_union->second.str() << " is missing)";
  }
  out << "\n";
  out << "  axiom 3 (covers carrier): " << (b.covers_carrier ? "ok" : "VIOLATED");
  if (!b.uncovered_atoms.empty()) {
    out << " (uncovered:";
    for (const auto& a : b.uncovered_atoms) out << " " << a;
    out << ")";
  }
  out << "\n";
}

ordered_json json_bunch_report(const BunchReport& b) {
  ordered_json j;
  j["axiom1_no_empty_member"] = b.no_empty_member;
  j["axiom2_union_closed"] = b.union_closed;
  if (b.missing_union) {
    j["axiom2_witness"] = ordered_json{{"first", b.missing_union->first.str()},
                                       {"second", b.missing_union->second.str()}};
  }
  j["axiom3_covers_carrier"] = b.covers_carrier;
  if (!b.uncovered_atoms.empty()) j["axiom3_uncovered"] = b.uncovered_atoms;
  j["valid"] = b.ok();
  return j;
}

}  // namespace

std::string render_condition(const ConditionReport& report, Format format) {
  if (format == Format::json) {
    ordered_json j;
    j["command"] = "condition";
    j["event"] = report.event;
    j["given"] = report.given;
    j["value"] = json_rational(report.value);
    return dump(j);
  }
  std::ostringstream out;
  out << "command: condition\n";
  out << "event: " << report.event << "\n";
  out << "given: " << report.given << "\n";
  out << "value: " << fmt_rational(report.value) << "\n";
  return out.str();
}

std::string render_validate(const ValidateReport& report, Format format) {
  if (format == Format::json) {
    ordered_json j;
    j["command"] = "validate";
    j["atoms"] = report.atoms;
    j["total_mass"] = json_rational(report.total_mass);
    j["statistic"] = report.has_statistic;
    j["events"] = report.events;
    j["functions"] = report.functions;
    if (report.bunch) j["bunch"] = json_bunch_report(*report.bunch);
    j["tables"] = report.tables;
    return dump(j);
  }
  std::ostringstream out;
  out << "command: validate\n";
  out << "atoms: " << report.atoms << "\n";
  out << "total mass: " << fmt_rational(report.total_mass) << "\n";
  out << "statistic: " << (report.has_statistic ? "yes" : "no") << "\n";
  out << "events: " << report.events << "\n";
  out << "functions: " << report.functions << "\n";
  if (report.bunch) {
    out << "bunch: " << (report.bunch->ok() ? "valid" : "INVALID") << "\n";
    text_bunch_report(out, *report.bunch);
  }
  out << "tables: " << report.tables << "\n";
  return out.str();
}

std::string render_check(const CheckReport& report, Format format) {
  if (format == Format::json) {
    ordered_json j;
    j["command"] = "check";
    j["bunch"] = json_bunch_report(report.bunch);
    if (report.consistency) {
      ordered_json c;
      c["consistent"] = report.consistency->consistent;
      c["nested_pairs_checked"] = report.consistency->nested_pairs_checked;
      if (report.consistency->violation) {
        const auto& v = *report.consistency->violation;
        c["violation"] = ordered_json{{"atom", v.atom},
                                      {"inner", v.inner.str()},
                                      {"outer", v.outer.str()},
                                      {"lhs", json_rational(v.lhs)},
                                      {"rhs", json_rational(v.rhs)}};
      }
      j["consistency"] = c;
    }
    if (report.reconstructed) {
      j["reconstructed_measure"] = json_measure_table(*report.reconstructed);
      j["roundtrip"] = report.roundtrip_ok ? "PASS" : "FAIL";
    }
    if (report.reconstruction_error) j["reconstruction_error"] = *report.reconstruction_error;
    return dump(j);
  }
  std::ostringstream out;
  out << "command: check\n";
  out << "bunch: " << (report.bunch.ok() ? "valid" : "INVALID") << "\n";
  if (!report.bunch.ok()) text_bunch_report(out, report.bunch);
  if (report.consistency) {
    out << "consistency: " << (report.consistency->consistent ? "CONSISTENT" : "INCONSISTENT")
        << "\n";
    out << "  nested pairs checked: " << report.consistency->nested_pairs_checked << "\n";
    if (report.consistency->violation) {
      const auto& v = *report.consistency->violation;
      out << "  violation: P({" << v.atom << "}|" << v.inner.str() << ") = " << v.lhs.str()
          << " but P({" << v.atom << "}|" << v.outer.str() << ")/P(" << v.inner.str() << "|"
          << v.outer.str() << ") = " << v.rhs.str() << "\n";
    }
  }
  if (report.reconstructed) {
    out << "reconstructed measure (reference condition scaled to 1):\n";
    text_measure_table(out, *report.reconstructed);
    out << "round trip: " << (report.roundtrip_ok ? "PASS" : "FAIL") << "\n";
  }
  if (report.reconstruction_error) {
    out << "reconstruction error: " << *report.reconstruction_error << "\n";
  }
  return out.str();
}

std::string render_disintegrate(const DisintegrateReport& report, Format format) {
  const Carrier& codomain = report.state.statistic().codomain();
  const Carrier& domain = report.state.statistic().domain();

  if (format == Format::json) {
    ordered_json j;
    j["command"] = "disintegrate";
    j["nu_mode"] = report.nu_mode;
    j["codomain"] = codomain.atoms();
    j["p_t"] = json_measure_table(report.state.p_t());
    j["nu"] = json_measure_table(report.state.nu());
    ordered_json kernels = ordered_json::object();
    for (std::size_t t = 0; t < codomain.size(); ++t) {
      ordered_json kernel = ordered_json::object();
      for (std::size_t i = 0; i < domain.size(); ++i) {
        const Rational& w = report.state.kernel(t)[i];
        if (!w.is_zero()) kernel[domain.atom(i)] = json_rational(w);
      }
      kernels[codomain.atom(t)] = kernel;
    }
    j["kernels"] = kernels;
    ordered_json facts = ordered_json::array();
    for (const auto& f : report.factorizations) {
      ordered_json entry;
      entry["event"] = f.event;
      entry["given"] = f.given;
      entry["factorization"] = f.report.factorization_ok ? "PASS" : "FAIL";
      if (f.report.factorization_witness) entry["factorization_witness"] = *f.report.factorization_witness;
      entry["scaling_identity"] = f.report.scaling_identity_ok ? "PASS" : "FAIL";
      if (f.report.scaling_witness) entry["scaling_witness"] = *f.report.scaling_witness;
      facts.push_back(entry);
    }
    j["factorizations"] = facts;
    return dump(j);
  }

  std::ostringstream out;
  out << "command: disintegrate\n";
  out << "nu mode: " << report.nu_mode << "\n";
  out << "codomain:";
  for (const auto& a : codomain.atoms()) out << " " << a;
  out << "\n";
  out << "P_T:\n";
  text_measure_table(out, report.state.p_t());
  out << "nu:\n";
  text_measure_table(out, report.state.nu());
  for (std::size_t t = 0; t < codomain.size(); ++t) {
    bool all_zero = true;
    for (const auto& w : report.state.kernel(t)) all_zero = all_zero && w.is_zero();
    if (all_zero) {
      out << "kernel " << codomain.atom(t) << ": zero\n";
      continue;
    }
    out << "kernel " << codomain.atom(t) << ":\n";
    for (std::size_t i = 0; i < domain.size(); ++i) {
      const Rational& w = report.state.kernel(t)[i];
      if (!w.is_zero()) out << "  " << domain.atom(i) << " = " << fmt_rational(w) << "\n";
    }
  }
  for (const auto& f : report.factorizations) {
    out << "factorization[event=" << f.event << " given=" << f.given
        << "]: " << (f.report.factorization_ok ? "PASS" : "FAIL");
    if (f.report.factorization_witness) out << " (witness " << *f.report.factorization_witness << ")";
    out << "\n";
    out << "  scaling identity: " << (f.report.scaling_identity_ok ? "PASS" : "FAIL");
    if (f.report.scaling_witness) out << " (witness " << *f.report.scaling_witness << ")";
    out << "\n";
  }
  return out.str();
}

std::string render_posterior(const PosteriorReport& report, Format format) {
  if (format == Format::json) {
    ordered_json j;
    j["command"] = "posterior";
    ordered_json points = ordered_json::array();
    for (const auto& p : report.points) {
      points.push_back(ordered_json{{"window", p.window}, {"posterior", json_rational(p.posterior)}});
    }
    j["points"] = points;
    j["max_successive_difference"] = json_rational(report.max_successive_diff);
    j["stabilized"] = report.stabilized;
    return dump(j);
  }
  std::ostringstream out;
  out << "command: posterior\n";
  out << "windows:";
  for (const auto& p : report.points) out << " " << p.window;
  out << "\n";
  for (const auto& p : report.points) {
    out << "posterior[N=" << p.window << "] = " << fmt_rational(p.posterior) << "\n";
  }
  out << "max successive difference: " << fmt_rational(report.max_successive_diff) << "\n";
  out << "stabilized: " << (report.stabilized ? "yes" : "no") << "\n";
  return out.str();
}

}  // namespace renyi
