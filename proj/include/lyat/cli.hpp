#pragma once

#include "lyat/operator_spaces.hpp"
#include "lyat/run_report.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace lyat {

enum class Command { Verify, Spaces, Audit, Embed, Deform, Perturb, Report };

std::optional<Command> command_from_name(std::string_view name);
std::string_view command_name(Command c);

struct RunConfig {
  Command command = Command::Verify;
  std::string input;                   ///< algebra file; ignored when `abelian` is set
  std::optional<Field> field;          ///< overrides the field named in the file
  std::optional<std::size_t> abelian;  ///< use the abelian algebra of this dimension
  std::vector<SpaceKind> which;        ///< spaces to compute; empty means all
  std::size_t samples = 8;
  std::uint64_t seed = 1;
  std::optional<std::string> map_path; ///< explicit perturbation map
};

/// "der,qder,centroid" -> kinds; throws std::invalid_argument on unknown keys.
std::vector<SpaceKind> parse_space_list(std::string_view text);

/// Loads the algebra named by the config (ParseError / InvariantError on bad
/// input) and runs the command. Deterministic for a fixed config.
RunReport run(const RunConfig& config);
RunReport run(const RunConfig& config, const LYAlgebra& a);

} // namespace lyat
