#include "lyat/report.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace lyat {

std::string_view status_name(Status s) {
  switch (s) {
  case Status::Pass: return "pass";
  case Status::Fail: return "FAIL";
  case Status::Unmet: return "hypothesis not met";
  case Status::Info: return "info";
  }
  return "?";
}

Status status_from_name(std::string_view s) {
  for (Status st : {Status::Pass, Status::Fail, Status::Unmet, Status::Info})
    if (status_name(st) == s) return st;
  throw std::invalid_argument("unknown status: " + std::string(s));
}

Check& Report::add(std::string name, Status status, std::string detail) {
  checks.push_back({std::move(name), status, std::move(detail)});
  return checks.back();
}

Check& Report::expect(std::string name, bool ok, std::string detail) {
  return add(std::move(name), ok ? Status::Pass : Status::Fail, std::move(detail));
}

void Report::add_dimension(std::string name, std::size_t value) {
  dimensions.emplace_back(std::move(name), value);
}

void Report::append(const Report& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
  dimensions.insert(dimensions.end(), other.dimensions.begin(), other.dimensions.end());
}

bool Report::failed() const {
  for (const auto& c : checks)
    if (c.status == Status::Fail) return true;
  return false;
}

const Check* Report::find(std::string_view name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

Report fold_reports(const std::vector<Report>& reports, const std::string& over) {
  std::vector<std::string> names;
  for (const auto& r : reports)
    for (const auto& c : r.checks)
      if (std::find(names.begin(), names.end(), c.name) == names.end()) names.push_back(c.name);
  Report out;
  for (const auto& name : names) {
    std::vector<std::pair<std::size_t, std::string>> info;
    for (std::size_t i = 0; i < reports.size(); ++i)
      if (const Check* k = reports[i].find(name); k && k->status == Status::Info) info.emplace_back(i, k->detail);
    if (!info.empty()) {
      bool uniform = true;
      for (const auto& [i, d] : info) uniform = uniform && d == info.front().second;
      std::string text = uniform ? info.front().second : std::string();
      if (!uniform)
        for (const auto& [i, d] : info) text += (text.empty() ? "" : "; ") + over + " #" + std::to_string(i) + ": " + d;
      out.add(name, Status::Info, text);
      continue;
    }
    std::size_t pass = 0, unmet = 0;
    std::optional<std::string> failure, first_unmet;
    for (std::size_t i = 0; i < reports.size(); ++i) {
      const Check* k = reports[i].find(name);
      if (!k) continue;
      if (k->status == Status::Pass) ++pass;
      if (k->status == Status::Unmet && unmet++ == 0 && !k->detail.empty())
        first_unmet = over + " #" + std::to_string(i) + ": " + k->detail;
      if (k->status == Status::Fail && !failure)
        failure = over + " #" + std::to_string(i) + (k->detail.empty() ? "" : ": " + k->detail);
    }
    if (failure)
      out.add(name, Status::Fail, *failure);
    else if (pass > 0)
      out.add(name, Status::Pass,
              std::to_string(pass) + " of " + std::to_string(reports.size()) + " " + over + " elements, " +
                  std::to_string(unmet) + " outside the hypothesis");
    else
      out.add(name, Status::Unmet,
              "no " + over + " element meets the hypothesis" + (first_unmet ? " (" + *first_unmet + ")" : ""));
  }
  return out;
}

std::string Report::to_text() const {
  std::ostringstream os;
  if (!title.empty()) os << "== " << title << " ==\n";
  for (const auto& [name, value] : dimensions) os << "dim " << name << " = " << value << "\n";
  for (const auto& c : checks) {
    os << "[" << status_name(c.status) << "] " << c.name;
    if (!c.detail.empty()) os << ": " << c.detail;
    os << "\n";
  }
  return os.str();
}

} // namespace lyat
