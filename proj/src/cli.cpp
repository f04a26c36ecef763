#include "lyat/cli.hpp"

#include "lyat/audits.hpp"
#include "lyat/deformation.hpp"
#include "lyat/embedding.hpp"
#include "lyat/io.hpp"

#include <array>
#include <sstream>

namespace lyat {

namespace {

constexpr std::array<std::pair<Command, std::string_view>, 7> kCommands{{
    {Command::Verify, "verify"},
    {Command::Spaces, "spaces"},
    {Command::Audit, "audit"},
    {Command::Embed, "embed"},
    {Command::Deform, "deform"},
    {Command::Perturb, "perturb"},
    {Command::Report, "report"},
}};

constexpr std::array<SpaceKind, 7> kAllSpaces{SpaceKind::Der,      SpaceKind::ZDer,      SpaceKind::QDer, SpaceKind::GDer,
                                              SpaceKind::Centroid, SpaceKind::QCentroid, SpaceKind::S};

SpaceSummary summarize(const OperatorSpace& s) {
  return SpaceSummary{std::string(space_key(s.kind())), s.dim(), s.basis()};
}

Report structure_report(const LYAlgebra& a) {
  Report r;
  r.title = "structure";
  r.add_dimension("center", center(a).dim());
  r.add_dimension("[T,T]", bracket_span(a).dim());
  r.add_dimension("{T,T,T}", triple_span(a).dim());
  r.add_dimension("derived algebra", derived_algebra(a).dim());
  bool no_triple = true, no_bracket = true;
  for (const auto& x : a.triple_constants()) no_triple = no_triple && x.is_zero();
  for (const auto& x : a.bracket_constants()) no_bracket = no_bracket && x.is_zero();
  r.add("zero triple product (Lie algebra)", Status::Info, no_triple ? "yes" : "no");
  r.add("zero bracket (Lie triple system)", Status::Info, no_bracket ? "yes" : "no");
  return r;
}

Report char_zero_only(const std::string& title) {
  Report r;
  r.title = title;
  r.add("computed", Status::Unmet, "characteristic 0 only");
  return r;
}

void add_spaces(RunReport& out, const LYAlgebra& a, const std::vector<SpaceKind>& which) {
  const std::vector<SpaceKind> kinds = which.empty() ? std::vector<SpaceKind>(kAllSpaces.begin(), kAllSpaces.end()) : which;
  for (SpaceKind k : kinds) {
    if (k == SpaceKind::S && !a.field().is_rational()) {
      out.sections.emplace_back("s_space_note", char_zero_only("s_space"));
      continue;
    }
    out.spaces.push_back(summarize(compute_space(a, k)));
  }
}

void add_spaces(RunReport& out, const SpaceSet& s) {
  for (SpaceKind k : kAllSpaces)
    if (k != SpaceKind::S || s.s) out.spaces.push_back(summarize(s.get(k)));
}

void add_embedding(RunReport& out, const LYAlgebra& a) {
  const CheckAlgebra ca = build_check(a);
  Report r;
  r.title = "enlarged algebra";
  r.add_dimension("check_algebra", ca.total.dim());
  r.add_dimension("[T,T]", ca.brackets.dim());
  r.add_dimension("{T,T,T}", ca.triples.dim());
  r.add_dimension("U", ca.u.dim());
  r.add_dimension("V", ca.v.dim());
  r.add("axioms of the enlarged algebra", Status::Info, ca.axioms.summary());
  for (const auto& f : ca.axioms.failures) {
    std::string where = "(";
    for (std::size_t i = 0; i < f.indices.size(); ++i) where += (i ? ", " : "") + ca.total.labels()[f.indices[i]];
    r.add(f.axiom + " counterexample", Status::Info, where + "), defect " + to_string(f.defect));
  }
  out.sections.emplace_back("check_algebra", std::move(r));
  out.sections.emplace_back("prop_4_1", verify_prop_4_1(ca));
  out.sections.emplace_back("prop_4_2", verify_prop_4_2(ca));
}

void add_deformation(RunReport& out, const LYAlgebra& a) {
  if (!a.field().is_rational()) {
    out.sections.emplace_back("cohomology", char_zero_only("coboundary operator"));
    return;
  }
  const std::size_t n = a.dim();
  Report r = audit_coboundary(a);
  std::vector<Matrix> elementary_maps;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) elementary_maps.push_back(elementary(a.field(), n, i, j));
  r.append(audit_lemma_5_4_1(a, elementary_maps));
  const OperatorSpace qd = qder(a);
  std::vector<Report> per_map;
  for (const auto& d : qd.basis()) {
    const auto blocks = qd.witness_for(d);
    per_map.push_back(audit_lemma_5_4_2(a, blocks->at(0), blocks->at(1), blocks->at(2)));
  }
  r.append(fold_reports(per_map, "QDer basis"));
  out.sections.emplace_back("cohomology", std::move(r));
  out.sections.emplace_back("prop_5_6", audit_prop_5_6(a));
}

void add_perturbation(RunReport& out, const LYAlgebra& a, const RunConfig& config) {
  if (!a.field().is_rational()) {
    out.sections.emplace_back("perturbation", char_zero_only("robustness evidence"));
    return;
  }
  std::vector<Matrix> maps;
  if (config.map_path)
    maps.push_back(load_matrix(*config.map_path, a.field(), a.dim()));
  else
    maps = sample_maps(a, config.samples, config.seed);
  out.sections.emplace_back("perturbation", robustness_report(a, maps));
  if (config.map_path) out.sections.emplace_back("prop_5_2", audit_prop_5_2(a, maps.front()));
}

} // namespace

std::optional<Command> command_from_name(std::string_view name) {
  for (const auto& [c, s] : kCommands)
    if (s == name) return c;
  return std::nullopt;
}

std::string_view command_name(Command c) {
  for (const auto& [k, s] : kCommands)
    if (k == c) return s;
  return "?";
}

std::vector<SpaceKind> parse_space_list(std::string_view text) {
  std::vector<SpaceKind> out;
  std::istringstream is{std::string(text)};
  for (std::string key; std::getline(is, key, ',');) {
    if (key.empty()) continue;
    bool found = false;
    for (SpaceKind k : kAllSpaces)
      if (space_key(k) == key || (k == SpaceKind::S && key == "s")) {
        out.push_back(k);
        found = true;
      }
    if (!found) throw std::invalid_argument("unknown space '" + key + "'");
  }
  return out;
}

RunReport run(const RunConfig& config) {
  if (config.abelian) return run(config, LYAlgebra::abelian(config.field.value_or(Field::rationals()), *config.abelian));
  return run(config, load_algebra(config.input, config.field));
}

RunReport run(const RunConfig& config, const LYAlgebra& a) {
  RunReport out;
  out.command = std::string(command_name(config.command));
  out.input = config.abelian ? "abelian_" + std::to_string(*config.abelian) : config.input;
  out.field = a.field();
  out.labels = a.labels();
  out.axioms = check_axioms(a);

  switch (config.command) {
  case Command::Verify:
    out.sections.emplace_back("structure", structure_report(a));
    break;
  case Command::Spaces:
    add_spaces(out, a, config.which);
    break;
  case Command::Audit: {
    const SpaceSet s = compute_spaces(a);
    add_spaces(out, s);
    out.sections.emplace_back("audit", audit_all(a, s));
    break;
  }
  case Command::Embed:
    add_embedding(out, a);
    break;
  case Command::Deform:
    add_deformation(out, a);
    break;
  case Command::Perturb:
    add_perturbation(out, a, config);
    break;
  case Command::Report: {
    out.sections.emplace_back("structure", structure_report(a));
    const SpaceSet s = compute_spaces(a);
    add_spaces(out, s);
    out.sections.emplace_back("audit", audit_all(a, s));
    add_embedding(out, a);
    add_deformation(out, a);
    add_perturbation(out, a, config);
    break;
  }
  }
  return out;
}

} // namespace lyat
