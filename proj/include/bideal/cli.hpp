#ifndef BIDEAL_CLI_HPP
#define BIDEAL_CLI_HPP

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "arrangement.hpp"
#include "bernstein.hpp"
#include "document.hpp"
#include "errors.hpp"
#include "lattice.hpp"
#include "report.hpp"
#include "structure.hpp"

namespace bideal::cli {

enum ExitCode : int { exit_ok = 0, exit_malformed = 1, exit_domain = 2, exit_usage = 64 };

struct Options {
  std::string command;
  std::string input;
  std::string family;
  std::string format = "text";
  bool assume_free = false;
  std::optional<std::size_t> depth;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline std::pair<Family, std::size_t> parse_family_spec(const std::string& spec) {
  auto colon = spec.find(':');
  if (colon == std::string::npos) throw UsageError("--family expects NAME:PARAM, got '" + spec + "'");
  auto f = parse_family(spec.substr(0, colon));
  if (!f) throw UsageError("unknown family '" + spec.substr(0, colon) + "' (braid, boolean, generic2d)");
  std::string param = spec.substr(colon + 1);
  if (param.empty() || param.find_first_not_of("0123456789") != std::string::npos || param.size() > 9)
    throw UsageError("family parameter must be a nonnegative integer, got '" + param + "'");
  return {*f, std::stoul(param)};
}

inline std::size_t depth_limit(const Options& opt, const std::optional<std::string>& env_depth) {
  if (opt.depth) return *opt.depth;
  if (env_depth) {
    const std::string& s = *env_depth;
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos || s.size() > 18)
      throw Error(ErrorKind::malformed_input, "BIDEAL_DEPTH must be a positive integer, got '" + s + "'");
    return std::stoull(s);
  }
  return default_depth_limit;
}

inline ArrangementDocument load_input(const Options& opt) {
  if (!opt.family.empty()) {
    auto [f, param] = parse_family_spec(opt.family);
    return to_document(family(f, param));
  }
  std::string text;
  if (opt.input == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(opt.input, std::ios::binary);
    if (!in) throw Error(ErrorKind::malformed_input, "cannot read '" + opt.input + "'");
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  return parse_document(text);
}

inline ReportDocument execute(const Options& opt, const std::optional<std::string>& env_depth) {
  ArrangementDocument doc = load_input(opt);
  Arrangement a = to_arrangement(doc);
  ReportDocument report{opt.command, digest(to_document(a)), nullptr};
  const std::string& cmd = opt.command;

  if (cmd == "family") {
    report.payload = to_json(to_document(a));
  } else if (cmd == "lattice") {
    report.payload = lattice_payload(intersection_lattice(a));
  } else if (cmd == "charpoly") {
    report.payload = charpoly_payload(char_poly(a));
  } else if (cmd == "decompose") {
    report.payload = decompose_payload(irreducible_components(a));
  } else if (cmd == "exponents") {
    report.payload = exponents_payload(exponents(a));
  } else if (cmd == "freeness") {
    report.payload = freeness_payload(freeness(a, depth_limit(opt, env_depth)), exponents(a));
  } else if (cmd == "bideal" || cmd == "slopes") {
    FreenessVerdict verdict;
    if (!opt.assume_free) verdict = freeness(a, depth_limit(opt, env_depth));
    if (cmd == "bideal")
      report.payload = bideal_payload(bernstein_generator(a, verdict, opt.assume_free));
    else
      report.payload = slopes_payload(slopes(a, verdict, opt.assume_free));
  }
  return report;
}

/*
 * Runs one command line (args excludes the program name). Exit codes:
 * 0 success, 1 malformed input, 2 domain error, 64 usage.
 */
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
               const std::optional<std::string>& env_depth = std::nullopt) {
  CLI::App app{"Intersection lattices, freeness and Bernstein ideals of hyperplane arrangements", "bideal"};
  app.require_subcommand(1, 1);
  Options opt;

  const std::vector<std::pair<std::string, std::string>> commands = {
      {"lattice", "Intersection lattice with Mobius values"},
      {"charpoly", "Characteristic polynomial"},
      {"decompose", "Irreducible decomposition (matroid components)"},
      {"exponents", "Exponents from the characteristic polynomial"},
      {"freeness", "Freeness verdict with certificate"},
      {"bideal", "Generator of the Bernstein ideal of a free arrangement"},
      {"slopes", "Slopes of the characteristic variety"},
      {"family", "Print the arrangement document of a named family"},
  };
  for (const auto& [name, description] : commands) {
    CLI::App* sub = app.add_subcommand(name, description);
    auto* input = sub->add_option("--input", opt.input, "Arrangement JSON file ('-' for stdin)");
    auto* fam = sub->add_option("--family", opt.family, "Named family NAME:PARAM (braid, boolean, generic2d)");
    input->excludes(fam);
    if (name == "family") fam->required();
    sub->add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"text", "json", "latex"}));
    sub->add_flag("--assume-free", opt.assume_free, "Skip the freeness requirement");
    sub->add_option("--depth", opt.depth, "Inductive search limit (expanded sub-arrangements)")
        ->check(CLI::PositiveNumber);
    sub->callback([&opt, name = name] { opt.command = name; });
  }

  std::vector<std::string> argv_store{"bideal"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s : argv_store) argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
    if (opt.input.empty() && opt.family.empty()) throw UsageError("one of --input or --family is required");
    if (opt.command == "family" && !opt.input.empty()) throw UsageError("family takes --family only");
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return exit_ok;
    }
    err << "usage: " << e.what() << "\n" << app.help();
    return exit_usage;
  } catch (const UsageError& e) {
    err << "usage: " << e.what() << "\n" << app.help();
    return exit_usage;
  }

  ReportFormat format = opt.format == "json" ? ReportFormat::json
                        : opt.format == "latex" ? ReportFormat::latex
                                                : ReportFormat::text;
  try {
    ReportDocument report = execute(opt, env_depth);
    out << render(report, format);
    return exit_ok;
  } catch (const UsageError& e) {
    err << "usage: " << e.what() << "\n";
    return exit_usage;
  } catch (const Error& e) {
    err << e.what() << "\n";
    return e.kind() == ErrorKind::malformed_input ? exit_malformed : exit_domain;
  }
}

}  // namespace bideal::cli

#endif  // BIDEAL_CLI_HPP
