#pragma once

#include "lyat/algebra.hpp"
#include "lyat/report.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace lyat {

struct SpaceSummary {
  std::string key; ///< der, zder, qder, gder, centroid, qcentroid, s_space
  std::size_t dim = 0;
  std::vector<Matrix> basis;

  friend bool operator==(const SpaceSummary&, const SpaceSummary&) = default;
};

/// Everything one CLI invocation produced. Spaces and sections are emitted
/// as top-level JSON keys under their own names.
struct RunReport {
  std::string command;
  std::string input;
  Field field = Field::rationals();
  std::vector<std::string> labels;
  AxiomReport axioms;
  std::vector<SpaceSummary> spaces;
  std::vector<std::pair<std::string, Report>> sections;

  /// 0 when every asserted check passed, 2 when the input fails the axioms
  /// (takes precedence), 3 when some section has a failed check.
  int exit_code() const;

  std::string to_text(bool with_bases = false) const;
  nlohmann::ordered_json to_json() const;
  static RunReport from_json(const nlohmann::ordered_json& j);

  friend bool operator==(const RunReport& a, const RunReport& b);
};

} // namespace lyat
