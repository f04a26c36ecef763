// Acceptance run: one PASS/FAIL line per criterion, followed by indented
// diagnostics. Exit status is the number of failed criteria.

#include "lyat/audits.hpp"
#include "lyat/catalog.hpp"
#include "lyat/cli.hpp"
#include "lyat/deformation.hpp"
#include "lyat/embedding.hpp"
#include "lyat/io.hpp"
#include "support.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>

using namespace lyat;
using support::QMat;
using support::QVec;
using support::Tensors;

namespace {

const Field kQ = Field::rationals();
const std::string kDir = LYAT_ALGEBRA_DIR;

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;

  void require(bool ok, const std::string& what) {
    if (!ok) pass = false;
    notes.push_back(std::string(ok ? "ok   " : "FAIL ") + what);
  }
  void note(const std::string& what) { notes.push_back("     " + what); }
};

Matrix map_from(std::size_t n, std::initializer_list<std::tuple<std::size_t, std::size_t, long>> entries) {
  Matrix m(kQ, n, n);
  for (const auto& [r, c, v] : entries) m(r, c) = kQ.from_int(v);
  return m;
}

bool vec_eq(const QVec& a, const QVec& b) { return a == b; }

QVec sum(std::initializer_list<QVec> xs, std::initializer_list<int> signs) {
  QVec out(xs.begin()->size());
  auto s = signs.begin();
  for (const auto& x : xs) {
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += *s * x[i];
    ++s;
  }
  return out;
}

/// First basis tuple where (f, f1, ..., f5) breaks a defining identity,
/// evaluated by contracting the raw tensors.
std::optional<std::string> delta_violation(const Tensors& t, const std::array<QMat, 6>& f) {
  const std::size_t n = t.n;
  auto ap = [&](std::size_t k, const QVec& v) { return support::apply_map(f[k], v); };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const QVec x = t.unit(i), y = t.unit(j);
      const QVec lhs = sum({t.bracket(ap(0, x), y), t.bracket(x, ap(1, y))}, {1, 1});
      if (!vec_eq(lhs, ap(2, t.bracket(x, y)))) return "bracket at (" + std::to_string(i) + "," + std::to_string(j) + ")";
      for (std::size_t k = 0; k < n; ++k) {
        const QVec z = t.unit(k);
        const QVec l3 = sum({t.triple(ap(0, x), y, z), t.triple(x, ap(3, y), z), t.triple(x, y, ap(4, z))}, {1, 1, 1});
        if (!vec_eq(l3, ap(5, t.triple(x, y, z))))
          return "triple at (" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ")";
      }
    }
  return std::nullopt;
}

bool in_bracket_centroid(const Tensors& t, const QMat& f) {
  for (std::size_t i = 0; i < t.n; ++i)
    for (std::size_t j = 0; j < t.n; ++j)
      if (t.bracket(support::apply_map(f, t.unit(i)), t.unit(j)) != support::apply_map(f, t.bracket(t.unit(i), t.unit(j))))
        return false;
  return true;
}

bool in_bracket_qcentroid(const Tensors& t, const QMat& f) {
  for (std::size_t i = 0; i < t.n; ++i)
    for (std::size_t j = 0; j < t.n; ++j)
      if (t.bracket(support::apply_map(f, t.unit(i)), t.unit(j)) != t.bracket(t.unit(i), support::apply_map(f, t.unit(j))))
        return false;
  return true;
}

std::optional<std::string> triple_centroid_violation(const LYAlgebra& a, const Matrix& f) {
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      for (std::size_t k = 0; k < a.dim(); ++k) {
        const Element x = a.basis_element(i), y = a.basis_element(j), z = a.basis_element(k);
        const Element lhs = a.triple(f.apply(x), y, z), rhs = f.apply(a.triple(x, y, z));
        if (lhs != rhs)
          return "{f x" + std::to_string(i) + ", x" + std::to_string(j) + ", x" + std::to_string(k) + "} = " +
                 to_string(lhs) + " but f{...} = " + to_string(rhs);
      }
  return std::nullopt;
}

std::size_t span_dim(const std::vector<Matrix>& ms, std::size_t n) {
  std::vector<Vector> flat;
  for (const auto& m : ms) flat.push_back(flatten(m));
  return Subspace::span(kQ, n * n, flat).dim();
}

std::string status_counts(const Report& r) {
  std::size_t pass = 0, unmet = 0, info = 0;
  for (const auto& c : r.checks) {
    pass += c.status == Status::Pass;
    unmet += c.status == Status::Unmet;
    info += c.status == Status::Info;
  }
  return std::to_string(pass) + " pass, " + std::to_string(unmet) + " unmet, " + std::to_string(info) + " info";
}

void first_failure(Outcome& o, const Report& r, const std::string& where) {
  for (const auto& c : r.checks)
    if (c.status == Status::Fail) {
      o.require(false, where + ": " + c.name + ": " + c.detail);
      return;
    }
}

std::size_t dimension(const Report& r, std::string_view name) {
  for (const auto& [k, v] : r.dimensions)
    if (k == name) return v;
  return static_cast<std::size_t>(-1);
}

// ---------------------------------------------------------------- criteria

Outcome example_2_10_golden() {
  Outcome o;
  RunConfig config;
  config.command = Command::Report;
  config.input = kDir + "/ly_2_10.alg";
  const auto start = std::chrono::steady_clock::now();
  const RunReport report = run(config);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  o.require(secs < 10.0, "report on ly_2_10.alg finished in " + std::to_string(secs) + " s (< 10 s)");

  const LYAlgebra a = load_algebra(config.input);
  const std::size_t n = a.dim();
  const Matrix id = Matrix::identity(kQ, n);
  const Matrix f1 = map_from(n, {{2, 0, 1}, {5, 1, -1}});
  const Matrix f2 = map_from(n, {{4, 0, 1}, {5, 3, -1}});
  const Matrix f3 = map_from(n, {{4, 1, -1}, {2, 3, 1}});

  std::size_t c_dim = 0, qc_dim = 0;
  for (const auto& s : report.spaces) {
    if (s.key == "centroid") c_dim = s.dim;
    if (s.key == "qcentroid") qc_dim = s.dim;
  }
  const OperatorSpace c = centroid(a), qc = qcentroid(a);
  o.require(c_dim == 3, "dim C(T) = " + std::to_string(c_dim) + " (expected 3)");
  o.require(c.dim() == 3 && c.contains(id) && c.contains(f1) && c.contains(f2),
            std::string("C(T) = span{id, f1, f2}: id ") + (c.contains(id) ? "in" : "not in") + ", f1 " +
                (c.contains(f1) ? "in" : "not in") + ", f2 " + (c.contains(f2) ? "in" : "not in"));
  o.require(qc_dim == 4, "dim QC(T) = " + std::to_string(qc_dim) + " (expected 4)");
  o.require(qc.contains(f3), std::string("f3 in QC(T): ") + (qc.contains(f3) ? "yes" : "no"));

  Subspace t1 = Subspace::span(kQ, n, {a.basis_element(1), a.basis_element(3), a.basis_element(5)});
  o.require(derived_algebra(a) == t1, "T^(1) = span{x1, x3, x5}");
  bool escapes = false;
  for (const auto& v : t1.basis_vectors()) escapes = escapes || !t1.contains(f3.apply(v));
  o.require(escapes, "f3(T^(1)) not inside T^(1)");

  // Why the dimensions differ: the listed triple products obstruct f1 and f2.
  o.note("axioms of the input: " + check_axioms(a).summary());
  if (auto v = triple_centroid_violation(a, f1)) o.note("f1 breaks the triple condition of C: " + *v);
  if (auto v = triple_centroid_violation(a, f2)) o.note("f2 breaks the triple condition of C: " + *v);
  const Tensors t(a);
  o.note("bracket-only reading (oracle): dim C = " + std::to_string(support::centroid_dim(t, true)) +
         ", dim QC = " + std::to_string(support::qcentroid_dim(t, true)));
  o.note(std::string("bracket-only reading: id, f1, f2 in C: ") +
         (in_bracket_centroid(t, support::to_q(id)) && in_bracket_centroid(t, support::to_q(f1)) &&
                  in_bracket_centroid(t, support::to_q(f2))
              ? "yes"
              : "no") +
         "; f3 in QC: " + (in_bracket_qcentroid(t, support::to_q(f3)) ? "yes" : "no") + "; f3 in C: " +
         (in_bracket_centroid(t, support::to_q(f3)) ? "yes" : "no") + "; span{id, f1, f2, f3} has dim " +
         std::to_string(span_dim({id, f1, f2, f3}, n)));
  o.note("full reading (oracle): dim C = " + std::to_string(support::centroid_dim(t)) +
         ", dim QC = " + std::to_string(support::qcentroid_dim(t)));
  return o;
}

Outcome example_2_9_golden() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  const LYAlgebra a = load_algebra(kDir + "/ly_2_9.alg");
  const Matrix d = map_from(2, {{0, 1, 1}}); // D(x) = 0, D(y) = x
  const OperatorSpace q = qder(a);
  const bool in_qder = q.contains(d);
  const bool in_der = der(a).contains(d);
  const auto w = q.witness_for(d);
  const Subspace t1 = derived_algebra(a);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  o.require(in_qder && w && satisfies(a, SpaceKind::QDer, *w), "D in QDer(T), witnesses re-verified");
  if (w) {
    const Tensors t(a);
    std::array<QMat, 6> tuple{support::to_q(d), support::to_q(d), support::to_q(w->at(1)),
                              support::to_q(d), support::to_q(d), support::to_q(w->at(2))};
    o.require(!delta_violation(t, tuple), "witness tuple holds under direct tensor contraction");
  }
  o.require(!in_der && !support::is_derivation(Tensors(a), support::to_q(d)), "D not in Der(T) (solver and oracle)");
  o.require(t1 == Subspace::span(kQ, 2, {a.basis_element(1)}), "T^(1) = span{y}");
  o.require(!t1.contains(d.apply(a.basis_element(1))), "D(y) = x lies outside T^(1)");
  o.require(secs < 1.0, "runtime " + std::to_string(secs) + " s (< 1 s)");
  return o;
}

Outcome embedding_theorem() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  const LYAlgebra a = load_algebra(kDir + "/ly_2_9.alg");
  o.require(center(a).is_zero(), "base is centerless");
  const CheckAlgebra ca = build_check(a);
  const Report r1 = verify_prop_4_1(ca), r2 = verify_prop_4_2(ca);
  for (const char* name : {"phi injective on QDer", "phi independent of the witness pair",
                           "phi(QDer) in Der of the enlarged algebra", "phi(D) restricted to T t is D"}) {
    const Check* c = r1.find(name);
    o.require(c && c->status == Status::Pass, std::string(name) + (c && !c->detail.empty() ? ": " + c->detail : ""));
  }
  for (const char* name : {"Der = phi(QDer) + ZDer", "phi(QDer) n ZDer = 0", "dim Der = dim QDer + dim ZDer"}) {
    const Check* c = r2.find(name);
    o.require(c && c->status == Status::Pass, std::string(name) + (c && !c->detail.empty() ? ": " + c->detail : ""));
  }
  const Tensors t(ca.total);
  const std::size_t der_t = support::der_dim(t), zder_t = support::zder_dim(t), qd = qder(a).dim();
  o.require(ca.total.dim() == 6, "enlarged algebra has dimension 6");
  o.require(der_t == qd + zder_t, "oracle on the enlarged algebra: dim Der = " + std::to_string(der_t) +
                                      " = " + std::to_string(qd) + " + " + std::to_string(zder_t));
  o.require(dimension(r2, "der of enlarged algebra") == der_t && dimension(r2, "zder of enlarged algebra") == zder_t,
            "library dimensions agree with the oracle");
  const Check* ax = r1.find("enlarged algebra satisfies the axioms");
  if (ax) o.note("axioms of the enlarged algebra: " + std::string(status_name(ax->status)) + ": " + ax->detail);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  o.require(secs < 10.0, "runtime " + std::to_string(secs) + " s (< 10 s)");
  return o;
}

Outcome inclusion_chain_suite() {
  Outcome o;
  std::vector<std::pair<std::string, LYAlgebra>> algebras;
  for (const auto& e : catalog()) algebras.emplace_back(e.name, e.algebra);
  support::Gen g(2024);
  for (int i = 0; i < 50; ++i) algebras.emplace_back("random #" + std::to_string(i), g.ly_algebra());
  std::mt19937_64 rng(2025);
  for (int i = 0; i < 10; ++i)
    algebras.emplace_back("library random #" + std::to_string(i), from_leibniz(random_leibniz_table(rng)));

  std::size_t checked = 0;
  Report totals;
  for (const auto& [name, a] : algebras) {
    const SpaceSet s = compute_spaces(a);
    for (const Report& r : {audit_inclusion_chain(a, s), audit_lemma_3_1(a, s), audit_prop_3_3(a, s), audit_jordan(a, s)}) {
      first_failure(o, r, name);
      totals.append(r);
    }
    // Independent reading of C <= QDer n QC.
    const Subspace meet = subspace_intersect(s.qder.space(), s.qcentroid.space());
    if (!meet.contains(s.centroid.space())) o.require(false, name + ": C not inside QDer n QC");
    ++checked;
  }
  o.require(o.pass, std::to_string(checked) + " algebras (" + std::to_string(algebras.size() - 60) +
                        " catalog, 60 random from Leibniz tables): " + status_counts(totals));
  return o;
}

Outcome cohomology_consistency() {
  Outcome o;
  for (const auto& e : catalog()) {
    const LYAlgebra& a = e.algebra;
    const bool ker_ok = kernel_of(delta1_matrix(a)) == der(a).space();
    const Tensors t(a);
    const bool oracle_ok = kernel_of(delta1_matrix(a)).dim() == support::der_dim(t);
    bool centroid_ok = true;
    const OperatorSpace c = centroid(a);
    for (const auto& m : c.basis()) {
      CochainPair expect = compose(m, a);
      expect.h = kQ.from_int(2) * expect.h;
      centroid_ok = centroid_ok && delta1(a, m) == expect;
    }
    o.require(ker_ok && oracle_ok && centroid_ok,
              e.name + ": ker delta1 = Der (dim " + std::to_string(der(a).dim()) + "), delta1(c) on " +
                  std::to_string(c.dim()) + " centroid basis elements");
  }
  for (const LYAlgebra& a : {example_2_9(), example_2_10()}) {
    const std::size_t n = a.dim();
    const Subspace triv = b2b3_trivial(a);
    const OperatorSpace q = qder(a);
    std::size_t agree = 0, in_q = 0;
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) {
        const Matrix f = elementary(kQ, n, r, c);
        const bool lhs = q.contains(f);
        agree += lhs == triv.contains(delta1(a, f).flat());
        in_q += lhs;
      }
    std::vector<Matrix> maps;
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) maps.push_back(elementary(kQ, n, r, c));
    const bool audit_ok = !audit_lemma_5_4_1(a, maps).failed();
    o.require(agree == n * n && audit_ok, "dim " + std::to_string(n) + ": f in QDer iff delta1(f) trivial on " +
                                              std::to_string(agree) + " of " + std::to_string(n * n) +
                                              " elementary maps (" + std::to_string(in_q) + " in QDer)");
  }
  return o;
}

Outcome prop_5_6_audit() {
  Outcome o;
  for (const auto& e : catalog()) {
    const Report r = audit_prop_5_6(e.algebra);
    first_failure(o, r, e.name);
    const Check* eq = r.find("regular n trivial = centroid pairs");
    const Check* hyp = r.find("QDer = Der + C");
    const std::string dims = "dim regular n trivial = " + std::to_string(dimension(r, "regular n trivial")) +
                             ", dim centroid pairs = " + std::to_string(dimension(r, "centroid_pairs"));
    if (eq && eq->status == Status::Pass)
      o.require(true, e.name + ": hypothesis holds; " + dims);
    else if (eq && eq->status == Status::Unmet)
      o.note(e.name + ": QDer = Der + C " + (hyp ? hyp->detail : "?") + ", not asserted; " + dims);
    else
      o.require(false, e.name + ": " + (eq ? eq->detail : "missing check") + "; " + dims);
  }
  return o;
}

Outcome trivial_case_suite() {
  Outcome o;
  for (std::size_t n = 1; n <= 5; ++n) {
    const LYAlgebra a = LYAlgebra::abelian(kQ, n);
    bool full = true;
    for (SpaceKind k : {SpaceKind::Der, SpaceKind::QDer, SpaceKind::GDer, SpaceKind::Centroid, SpaceKind::QCentroid,
                        SpaceKind::ZDer})
      full = full && compute_space(a, k).dim() == n * n;
    const bool center_full = center(a).is_full();
    const bool zero = b2b3_regular(a).is_zero() && b2b3_regular_pairs(a).is_zero() && b2b3_trivial(a).is_zero() &&
                      centroid_pairs(a).is_zero() && delta1_matrix(a).is_zero();
    o.require(full && center_full && zero, "abelian " + std::to_string(n) + ": six spaces of dim " +
                                               std::to_string(n * n) + ", Z(T) = T, deformation spaces zero");
  }
  return o;
}

Outcome solver_soundness() {
  Outcome o;
  std::vector<std::pair<std::string, LYAlgebra>> algebras;
  for (const auto& e : catalog()) algebras.emplace_back(e.name, e.algebra);
  support::Gen g(99);
  for (int i = 0; i < 20; ++i) algebras.emplace_back("random #" + std::to_string(i), g.ly_algebra());
  std::size_t elements = 0;
  for (const auto& [name, a] : algebras) {
    const Tensors t(a);
    for (SpaceKind k : {SpaceKind::Der, SpaceKind::ZDer, SpaceKind::QDer, SpaceKind::GDer, SpaceKind::Centroid,
                        SpaceKind::QCentroid, SpaceKind::S}) {
      const OperatorSpace s = compute_space(a, k);
      for (const auto& f : s.basis()) {
        const auto w = s.witness_for(f);
        if (!w) {
          o.require(false, name + " " + std::string(space_key(k)) + ": no witnesses for a basis element");
          continue;
        }
        for (const auto& tuple : instantiate(k, *w)) {
          std::array<QMat, 6> q;
          for (std::size_t i = 0; i < 6; ++i) q[i] = support::to_q(tuple.maps[i]);
          if (auto v = delta_violation(t, q)) o.require(false, name + " " + std::string(space_key(k)) + ": " + *v);
        }
        ++elements;
      }
    }
  }
  o.require(o.pass, std::to_string(elements) + " basis elements over " + std::to_string(algebras.size()) +
                        " algebras re-verified by tensor contraction");
  return o;
}

} // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"six-dimensional example golden test", example_2_10_golden},
      {"two-dimensional example golden test", example_2_9_golden},
      {"embedding theorem on the two-dimensional example", embedding_theorem},
      {"inclusion-chain property suite", inclusion_chain_suite},
      {"cohomology consistency", cohomology_consistency},
      {"coboundary intersection audit", prop_5_6_audit},
      {"trivial-case suite", trivial_case_suite},
      {"solver soundness regression", solver_soundness},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f s", secs);
    std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << "criterion " << i + 1 << ": " << criteria[i].first << " (" << buf
              << ")\n";
    for (const auto& n : o.notes) std::cout << "       " << n << "\n";
    failed += !o.pass;
  }
  std::cout << criteria.size() - static_cast<std::size_t>(failed) << " of " << criteria.size() << " criteria passed\n";
  return failed;
}
