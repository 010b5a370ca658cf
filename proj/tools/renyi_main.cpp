// renyi - exact conditional probability on finite discrete carriers.
//
// Exit codes: 0 success, 1 usage error, 2 input parse/validation error,
// 3 precondition failure, 4 verification failure. Reports go to stdout,
// diagnostics to stderr, so the tool is scriptable in test harnesses.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "renyi/renyi.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitParse = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitVerification = 4;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw renyi::ParseError("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

renyi::Format parse_format(const std::string& format) {
  if (format == "text") return renyi::Format::text;
  if (format == "json") return renyi::Format::json;
  throw renyi::ParseError("unknown format '" + format + "' (expected text or json)");
}

std::vector<long> parse_windows(const std::string& list) {
  std::vector<long> windows;
  std::string token;
  std::istringstream in(list);
  while (std::getline(in, token, ',')) {
    try {
      std::size_t used = 0;
      long n = std::stol(token, &used);
      if (used != token.size()) throw std::invalid_argument(token);
      windows.push_back(n);
    } catch (const std::exception&) {
      throw renyi::ParseError("malformed window '" + token + "' in --windows");
    }
  }
  if (windows.empty()) throw renyi::ParseError("--windows names no windows");
  return windows;
}

// --nu is one of: counting, pushforward, file:<path>.
renyi::DominatingMeasure resolve_nu(const renyi::Model& model, const std::string& nu_arg) {
  const auto& state = model.state();
  const auto& statistic = model.statistic();
  if (nu_arg == "counting") {
    return renyi::choose_dominating(state, statistic, renyi::NuMode::counting);
  }
  if (nu_arg == "pushforward") {
    return renyi::choose_dominating(state, statistic, renyi::NuMode::pushforward);
  }
  if (nu_arg.rfind("file:", 0) == 0) {
    renyi::ModelSpec nu_spec = renyi::parse_model(read_file(nu_arg.substr(5)));
    // Re-key the file's weights onto the codomain carrier; unlisted atoms
    // get weight zero and the domination check reports them if needed.
    const renyi::Carrier& codomain = statistic.codomain();
    std::vector<renyi::Rational> weights(codomain.size(), renyi::Rational(0));
    for (std::size_t i = 0; i < nu_spec.atoms.size(); ++i) {
      auto t = codomain.find(nu_spec.atoms[i]);
      if (!t) {
        throw renyi::ParseError("nu file atom '" + nu_spec.atoms[i] +
                                "' is not a codomain atom");
      }
      weights[*t] = nu_spec.weights[i];
    }
    renyi::SigmaFiniteMeasure nu(codomain, std::move(weights));
    return renyi::choose_dominating(state, statistic, renyi::NuMode::supplied, nu);
  }
  throw renyi::ParseError("unknown --nu '" + nu_arg +
                          "' (expected counting, pushforward or file:<path>)");
}

struct CommonArgs {
  std::string model_path;
  std::string format = "text";
};

int run_validate(const CommonArgs& args) {
  renyi::Model model = renyi::Model::from_text(read_file(args.model_path));
  renyi::ValidateReport report;
  report.atoms = model.carrier().size();
  report.total_mass = model.measure().total();
  report.has_statistic = model.has_statistic();
  report.events = model.spec().events.size();
  report.functions = model.spec().functions.size();
  if (model.has_bunch()) {
    report.bunch = renyi::validate_bunch(model.carrier(), model.bunch_events());
  }
  report.tables = model.spec().tables.size();
  std::cout << renyi::render_validate(report, parse_format(args.format));
  if (report.bunch && !report.bunch->ok()) return kExitVerification;
  return kExitOk;
}

int run_condition(const CommonArgs& args, const std::string& event_name,
                  const std::string& given_name) {
  renyi::Model model = renyi::Model::from_text(read_file(args.model_path));
  renyi::ConditionReport report{event_name, given_name,
                                renyi::condition(model.state(), model.target(event_name),
                                                 model.event(given_name))};
  std::cout << renyi::render_condition(report, parse_format(args.format));
  return kExitOk;
}

int run_disintegrate(const CommonArgs& args, const std::string& nu_arg,
                     const std::vector<std::string>& events,
                     const std::vector<std::string>& givens) {
  if (events.size() != givens.size()) {
    throw renyi::ParseError("--event and --given must be paired");
  }
  renyi::Model model = renyi::Model::from_text(read_file(args.model_path));
  renyi::DominatingMeasure nu = resolve_nu(model, nu_arg);
  renyi::ConditionalState state =
      renyi::disintegrate(model.state(), model.statistic(), nu);

  renyi::DisintegrateReport report{nu_arg, state, {}};
  bool all_ok = true;
  for (std::size_t i = 0; i < events.size(); ++i) {
    renyi::FactorizationReport fact = renyi::verify_factorization(
        state, model.target(events[i]), model.event(givens[i]));
    all_ok = all_ok && fact.ok();
    report.factorizations.push_back({events[i], givens[i], fact});
  }
  std::cout << renyi::render_disintegrate(report, parse_format(args.format));
  return all_ok ? kExitOk : kExitVerification;
}

int run_check(const CommonArgs& args) {
  renyi::Model model = renyi::Model::from_text(read_file(args.model_path));
  if (!model.has_bunch() || !model.has_tables()) {
    throw renyi::PreconditionError("check needs a model with [bunch] and [table] sections");
  }
  renyi::Format format = parse_format(args.format);

  renyi::CheckReport report;
  report.bunch = renyi::validate_bunch(model.carrier(), model.bunch_events());
  if (!report.bunch.ok()) {
    std::cout << renyi::render_check(report, format);
    return kExitVerification;
  }

  renyi::ConditionalFamily family = model.family();
  report.consistency = renyi::check_consistency(family);
  if (!report.consistency->consistent) {
    std::cout << renyi::render_check(report, format);
    return kExitVerification;
  }

  int code = kExitOk;
  try {
    renyi::RenyiState state = renyi::reconstruct(family);
    report.reconstructed = state.representative();
    report.roundtrip_ok = true;
    const auto& conditions = family.bunch().conditions();
    for (std::size_t i = 0; i < conditions.size() && report.roundtrip_ok; ++i) {
      for (std::size_t a = 0; a < model.carrier().size(); ++a) {
        if (!conditions[i].contains(a)) continue;
        renyi::Event atom = renyi::Event::singleton(model.carrier(), a);
        if (renyi::condition(state, atom, conditions[i]) != family.table(i)[a]) {
          report.roundtrip_ok = false;
          break;
        }
      }
    }
    if (!report.roundtrip_ok) code = kExitVerification;
  } catch (const renyi::NotRepresentableError& e) {
    report.reconstruction_error = e.what();
    code = kExitVerification;
  } catch (const renyi::PreconditionError& e) {
    report.reconstruction_error = e.what();
    code = kExitPrecondition;
  }
  std::cout << renyi::render_check(report, format);
  return code;
}

int run_posterior(const CommonArgs& args, const std::string& windows_arg) {
  renyi::TruncationFamily family = renyi::parse_family(read_file(args.model_path));
  renyi::PosteriorReport report =
      renyi::run_posterior(family, parse_windows(windows_arg));
  std::cout << renyi::render_posterior(report, parse_format(args.format));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computation with conditional probability spaces on finite carriers"};
  app.require_subcommand(1);

  CommonArgs args;
  std::string event_name, given_name, windows_arg;
  std::string nu_arg = "counting";
  std::vector<std::string> event_names, given_names;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--model", args.model_path, "model file")->required();
    cmd->add_option("--format", args.format, "report format: text or json");
  };

  CLI::App* validate = app.add_subcommand("validate", "parse and validate a model file");
  add_common(validate);

  CLI::App* cond = app.add_subcommand("condition", "compute P(event | given)");
  add_common(cond);
  cond->add_option("--event", event_name, "event or function name")->required();
  cond->add_option("--given", given_name, "conditioning event name")->required();

  CLI::App* dis = app.add_subcommand("disintegrate",
                                     "conditional states along the model's statistic");
  add_common(dis);
  dis->add_option("--nu", nu_arg, "dominating measure: counting, pushforward or file:<path>");
  dis->add_option("--event", event_names, "event/function names for factorization checks");
  dis->add_option("--given", given_names, "conditioning event names, paired with --event");

  CLI::App* check = app.add_subcommand("check",
                                       "consistency and reconstruction of a conditional family");
  add_common(check);

  CLI::App* post = app.add_subcommand("posterior", "posteriors across truncation windows");
  add_common(post);
  post->add_option("--windows", windows_arg, "comma separated window sizes")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (app.got_subcommand(validate)) return run_validate(args);
    if (app.got_subcommand(cond)) return run_condition(args, event_name, given_name);
    if (app.got_subcommand(dis)) return run_disintegrate(args, nu_arg, event_names, given_names);
    if (app.got_subcommand(check)) return run_check(args);
    if (app.got_subcommand(post)) return run_posterior(args, windows_arg);
  } catch (const renyi::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const renyi::CarrierMismatchError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const renyi::PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const renyi::NotRepresentableError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerification;
  } catch (const renyi::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  }
  return kExitUsage;
}
