#include "lyat/run_report.hpp"

#include "lyat/operator_spaces.hpp"

#include <set>
#include <sstream>

namespace lyat {

using nlohmann::ordered_json;

namespace {

const std::set<std::string>& space_keys() {
  static const std::set<std::string> keys = [] {
    std::set<std::string> k;
    for (auto kind : {SpaceKind::Der, SpaceKind::ZDer, SpaceKind::GDer, SpaceKind::QDer, SpaceKind::Centroid,
                      SpaceKind::QCentroid, SpaceKind::S})
      k.insert(std::string(space_key(kind)));
    return k;
  }();
  return keys;
}

ordered_json vector_json(const Vector& v) {
  ordered_json out = ordered_json::array();
  for (const auto& x : v) out.push_back(x.to_string());
  return out;
}

Vector vector_from(const ordered_json& j, const Field& f) {
  Vector v;
  for (const auto& x : j) v.push_back(f.parse(x.get<std::string>()));
  return v;
}

ordered_json matrix_json(const Matrix& m) {
  ordered_json out = ordered_json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(vector_json(m.row(r)));
  return out;
}

Matrix matrix_from(const ordered_json& j, const Field& f) {
  std::vector<Vector> rows;
  for (const auto& r : j) rows.push_back(vector_from(r, f));
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  return Matrix::from_rows(f, cols, rows);
}

ordered_json report_json(const Report& r) {
  ordered_json j;
  j["title"] = r.title;
  j["dimensions"] = ordered_json::array();
  for (const auto& [name, value] : r.dimensions) j["dimensions"].push_back({{"name", name}, {"value", value}});
  j["checks"] = ordered_json::array();
  for (const auto& c : r.checks)
    j["checks"].push_back({{"name", c.name}, {"status", status_name(c.status)}, {"detail", c.detail}});
  j["failed"] = r.failed();
  return j;
}

Report report_from(const ordered_json& j) {
  Report r;
  r.title = j.at("title").get<std::string>();
  for (const auto& d : j.at("dimensions"))
    r.dimensions.emplace_back(d.at("name").get<std::string>(), d.at("value").get<std::size_t>());
  for (const auto& c : j.at("checks"))
    r.checks.push_back(Check{c.at("name").get<std::string>(), status_from_name(c.at("status").get<std::string>()),
                             c.at("detail").get<std::string>()});
  return r;
}

std::string tuple_text(const std::vector<std::size_t>& idx, const std::vector<std::string>& labels) {
  std::string out = "(";
  for (std::size_t i = 0; i < idx.size(); ++i) out += (i ? ", " : "") + labels.at(idx[i]);
  return out + ")";
}

} // namespace

int RunReport::exit_code() const {
  if (!axioms.all_pass()) return 2;
  for (const auto& [key, r] : sections)
    if (r.failed()) return 3;
  return 0;
}

std::string RunReport::to_text(bool with_bases) const {
  std::ostringstream os;
  os << "lyat " << command << " " << input << "\n";
  os << "algebra: dim " << labels.size() << " over " << field.name() << ", basis";
  for (const auto& l : labels) os << " " << l;
  os << "\n";
  os << "axioms: " << axioms.summary() << "\n";
  for (const auto& f : axioms.failures)
    os << "  " << f.axiom << " fails at " << tuple_text(f.indices, labels) << ", defect " << to_string(f.defect)
       << "\n";
  for (const auto& s : spaces) {
    os << "dim " << s.key << " = " << s.dim << "\n";
    if (with_bases)
      for (std::size_t i = 0; i < s.basis.size(); ++i) os << "  #" << i << " " << s.basis[i].to_string() << "\n";
  }
  for (const auto& [key, r] : sections) os << r.to_text();
  const int code = exit_code();
  os << "result: " << (code == 0 ? "all asserted checks passed" : code == 2 ? "axiom failure" : "audit failure")
     << "\n";
  return os.str();
}

ordered_json RunReport::to_json() const {
  ordered_json j;
  j["command"] = command;
  j["input"] = input;
  ordered_json alg;
  alg["field"] = field.name();
  alg["dim"] = labels.size();
  alg["labels"] = labels;
  ordered_json ax;
  for (std::size_t i = 0; i < 6; ++i) ax["LY" + std::to_string(i + 1)] = axioms.pass[i];
  ax["failures"] = ordered_json::array();
  for (const auto& f : axioms.failures)
    ax["failures"].push_back({{"axiom", f.axiom}, {"indices", f.indices}, {"defect", vector_json(f.defect)}});
  alg["axioms"] = ax;
  j["algebra"] = alg;
  for (const auto& s : spaces) {
    ordered_json sj;
    sj["dim"] = s.dim;
    sj["basis"] = ordered_json::array();
    for (const auto& m : s.basis) sj["basis"].push_back(matrix_json(m));
    j[s.key] = sj;
  }
  for (const auto& [key, r] : sections) j[key] = report_json(r);
  j["exit_code"] = exit_code();
  return j;
}

RunReport RunReport::from_json(const ordered_json& j) {
  RunReport r;
  r.command = j.at("command").get<std::string>();
  r.input = j.at("input").get<std::string>();
  const auto& alg = j.at("algebra");
  r.field = Field::from_name(alg.at("field").get<std::string>(), true);
  r.labels = alg.at("labels").get<std::vector<std::string>>();
  const auto& ax = alg.at("axioms");
  for (std::size_t i = 0; i < 6; ++i) r.axioms.pass[i] = ax.at("LY" + std::to_string(i + 1)).get<bool>();
  for (const auto& f : ax.at("failures"))
    r.axioms.failures.push_back(AxiomFailure{f.at("axiom").get<std::string>(),
                                             f.at("indices").get<std::vector<std::size_t>>(),
                                             vector_from(f.at("defect"), r.field)});
  static const std::set<std::string> fixed{"command", "input", "algebra", "exit_code"};
  for (const auto& [key, value] : j.items()) {
    if (fixed.count(key)) continue;
    if (space_keys().count(key)) {
      SpaceSummary s{key, value.at("dim").get<std::size_t>(), {}};
      for (const auto& m : value.at("basis")) s.basis.push_back(matrix_from(m, r.field));
      r.spaces.push_back(std::move(s));
    } else {
      r.sections.emplace_back(key, report_from(value));
    }
  }
  return r;
}

bool operator==(const RunReport& a, const RunReport& b) {
  auto same_axioms = [](const AxiomReport& x, const AxiomReport& y) {
    if (x.pass != y.pass || x.failures.size() != y.failures.size()) return false;
    for (std::size_t i = 0; i < x.failures.size(); ++i)
      if (x.failures[i].axiom != y.failures[i].axiom || x.failures[i].indices != y.failures[i].indices ||
          x.failures[i].defect != y.failures[i].defect)
        return false;
    return true;
  };
  return a.command == b.command && a.input == b.input && a.field == b.field && a.labels == b.labels &&
         same_axioms(a.axioms, b.axioms) && a.spaces == b.spaces && a.sections == b.sections;
}

} // namespace lyat
