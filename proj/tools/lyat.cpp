#include "lyat/cli.hpp"
#include "lyat/io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

constexpr int kParseError = 1;
constexpr int kAxiomError = 2;

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations on Lie-Yamaguti algebras"};
  app.set_version_flag("--version", "lyat 0.1");

  std::string command, input, field_name, out_path, format = "text", which, map_path;
  std::size_t samples = 8, abelian = 0;
  std::uint64_t seed = 1;
  bool bases = false;

  app.add_option("command", command, "verify | spaces | audit | embed | deform | perturb | report")->required();
  app.add_option("file", input, "algebra definition file");
  app.add_option("--field", field_name, "Q or Fp:<p>; overrides the file");
  app.add_option("--out", out_path, "write the report here instead of stdout");
  app.add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--samples", samples, "random perturbations to classify");
  app.add_option("--seed", seed, "seed for the random perturbations");
  app.add_option("--which", which, "comma-separated spaces for `spaces`, e.g. der,qder,centroid");
  app.add_option("--map", map_path, "matrix file with an explicit perturbation map");
  app.add_option("--abelian", abelian, "use the abelian algebra of this dimension instead of a file");
  app.add_flag("--bases", bases, "print space bases in text output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kParseError;
  }

  lyat::RunConfig config;
  try {
    const auto cmd = lyat::command_from_name(command);
    if (!cmd) throw std::invalid_argument("unknown command '" + command + "'");
    config.command = *cmd;
    if (app.count("--abelian"))
      config.abelian = abelian;
    else if (input.empty())
      throw std::invalid_argument("missing algebra file");
    config.input = input;
    if (!field_name.empty()) config.field = lyat::parse_field(field_name);
    if (!which.empty()) config.which = lyat::parse_space_list(which);
    config.samples = samples;
    config.seed = seed;
    if (!map_path.empty()) config.map_path = map_path;
  } catch (const std::exception& e) {
    std::cerr << "lyat: " << e.what() << "\n";
    return kParseError;
  }

  lyat::RunReport report;
  try {
    report = lyat::run(config);
  } catch (const lyat::InvariantError& e) {
    std::cerr << "lyat: " << input << ": " << e.what() << "\n";
    return kAxiomError;
  } catch (const lyat::ParseError& e) {
    std::cerr << "lyat: " << input << ": " << e.what() << "\n";
    return kParseError;
  } catch (const std::exception& e) {
    std::cerr << "lyat: " << e.what() << "\n";
    return kParseError;
  }

  const std::string text = format == "json" ? report.to_json().dump(2) + "\n" : report.to_text(bases);
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path);
    if (!out) {
      std::cerr << "lyat: cannot write '" << out_path << "'\n";
      return kParseError;
    }
    out << text;
  }
  return report.exit_code();
}
