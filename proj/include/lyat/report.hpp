#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace lyat {

/// Pass and Fail are asserted outcomes. Unmet means the hypothesis of the
/// statement does not hold for this input, so nothing was asserted. Info
/// carries computed facts that are reported but never asserted.
enum class Status { Pass, Fail, Unmet, Info };

std::string_view status_name(Status s);
Status status_from_name(std::string_view s);

struct Check {
  std::string name;
  Status status;
  std::string detail;

  friend bool operator==(const Check&, const Check&) = default;
};

struct Report {
  std::string title;
  std::vector<Check> checks;
  std::vector<std::pair<std::string, std::size_t>> dimensions;

  Check& add(std::string name, Status status, std::string detail = {});
  Check& expect(std::string name, bool ok, std::string detail = {});
  void add_dimension(std::string name, std::size_t value);
  void append(const Report& other);

  bool failed() const;
  const Check* find(std::string_view name) const;
  std::string to_text() const;

  friend bool operator==(const Report&, const Report&) = default;
};

/// Merges reports of the same audit run over several maps into one check per
/// name: any failure fails, otherwise any pass passes, otherwise unmet. Info
/// details are kept once if they agree, else listed per map.
Report fold_reports(const std::vector<Report>& reports, const std::string& over);

} // namespace lyat
