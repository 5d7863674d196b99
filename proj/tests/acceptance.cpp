// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include "oracles.hpp"
#include "property_suites.hpp"
#include "sga/commands.hpp"
#include "sga/relations.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

using namespace sga;

namespace {

// Pinned tolerances and budgets.
constexpr double residual_tol = 1e-12;
constexpr double runtime_budget_s = 1.0;
constexpr int orbit_dim = 64;
constexpr int norm_levels = 64;
const std::vector<int> residual_dims = {16, 64, 256};
const std::vector<int> spectrum_dims = {1, 64, 256};

struct Verdict {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& why) {
    if (ok) return;
    if (pass) detail = why;
    pass = false;
  }
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string fmt(double v) { return format_real(v); }

std::vector<NamedPolynomial> set_polys(const std::string& set) { return as_polynomials(resolve_generator_set(set)); }

Verdict symbolic_suite() {
  Verdict v;
  const auto start = std::chrono::steady_clock::now();
  const auto suite = symbolic_relation_suite();
  const double elapsed = seconds_since(start);
  v.require(suite.checks.size() == 16, std::to_string(suite.checks.size()) + " relations");
  for (const auto& r : standard_relations()) {
    v.require(r.residual().terms().empty(), r.name + " residual " + r.residual().str());
  }
  for (const auto& c : suite.checks) v.require(c.exact_zero() && !c.failed(), c.name);
  v.require(elapsed < runtime_budget_s, "runtime " + fmt(elapsed) + " s");
  if (v.pass) v.detail = "16 exact zero residuals in " + fmt(elapsed) + " s";
  return v;
}

Verdict casimir_value() {
  Verdict v;
  v.require(casimir() == WeylPolynomial(Coefficient(make_rational(3, 16))), "casimir() = " + casimir().str());
  const auto rels = standard_relations();
  const auto res = numeric_residual(rels.back(), orbit_dim);
  v.require(res.window == orbit_dim - 8, "window " + std::to_string(res.window));
  v.require(static_cast<double>(res.inside) <= residual_tol, "max |K^2 - 3/16| = " + fmt(static_cast<double>(res.inside)));
  if (v.pass) {
    v.detail = "K^2 = 3/16 exactly; max |K^2 - 3/16 I| = " + fmt(static_cast<double>(res.inside)) + " on window " +
               std::to_string(res.window) + " at N=64";
  }
  return v;
}

Verdict closure_necessity() {
  Verdict v;
  const AlgebraBasis osp(standard_generators());
  const auto graded = close_under_bracket(resolve_generator_set("minimal"), BracketMode::graded);
  v.require(graded.basis.size() == 5, "graded dimension " + std::to_string(graded.basis.size()));
  v.require(same_span(graded.basis, osp), "graded closure span differs from the five generators");
  const auto plain = close_under_bracket(resolve_generator_set("minimal"), BracketMode::commutator_only);
  v.require(plain.basis.size() == 4, "commutator-only dimension " + std::to_string(plain.basis.size()));
  v.require(plain.basis.contains(WeylPolynomial::identity()), "commutator-only closure lacks the identity");
  const auto so21 = close_under_bracket(resolve_generator_set("so21"), BracketMode::graded);
  v.require(so21.added.empty() && so21.basis.size() == 3, "so(2,1) closure added elements");
  if (v.pass) v.detail = "graded 5 (= span of K+,K-,K3,Q,Qdag), commutator-only 4 with 1, so(2,1) adds nothing";
  return v;
}

Verdict jacobi() {
  Verdict v;
  const AlgebraBasis osp(standard_generators());
  const auto poly = graded_jacobi_check(osp);
  const auto tensor = graded_jacobi_check(structure_constants(osp));
  v.require(poly.checks.size() == 35 && tensor.checks.size() == 35, "triple count");
  for (const auto& c : poly.checks) v.require(c.exact_zero() && !c.failed(), c.name + " = " + c.exact_residual);
  for (const auto& c : tensor.checks) v.require(c.exact_zero() && !c.failed(), c.name + " = " + c.exact_residual);
  if (v.pass) v.detail = "35 triples exact zero on polynomials and on structure constants";
  return v;
}

Verdict orbits() {
  Verdict v;
  const auto start = std::chrono::steady_clock::now();
  const auto so21 = orbit(0, set_polys("so21"), orbit_dim);
  v.require(so21.partition.size() == 2, std::to_string(so21.partition.size()) + " so(2,1) orbits");
  v.require(detail::partition_matches_parity(so21), "so(2,1) orbits are not the parity sectors");
  int seeds = 0;
  for (const std::string set : {"osp", "Q,Qdag"}) {
    const auto gens = set_polys(set);
    const int window = orbit(0, gens, orbit_dim).trusted;  // 60 for osp, 62 for the linear {Q,Qdag}
    for (int seed = 0; seed < window; ++seed, ++seeds) {
      const auto o = orbit(seed, gens, orbit_dim);
      v.require(o.partition.size() == 1 && static_cast<int>(o.reachable.size()) == window,
                set + " from seed " + std::to_string(seed) + " reaches " + std::to_string(o.reachable.size()));
    }
  }
  const double elapsed = seconds_since(start);
  v.require(elapsed < runtime_budget_s, "runtime " + fmt(elapsed) + " s");
  if (v.pass) {
    v.detail = "so(2,1): 2 parity orbits on window " + std::to_string(so21.trusted) + "; osp and {Q,Qdag}: 1 orbit from " +
               "all " + std::to_string(seeds) + " seeds; " + fmt(elapsed) + " s";
  }
  return v;
}

Verdict spectrum_levels() {
  Verdict v;
  for (int dim : spectrum_dims) {
    const auto e = spectrum(dim, 1.0);
    v.require(static_cast<int>(e.size()) == dim, "size at N=" + std::to_string(dim));
    for (int n = 0; n < dim && n < static_cast<int>(e.size()); ++n) {
      v.require(e[static_cast<std::size_t>(n)] == n + 0.5, "E_" + std::to_string(n) + " = " + fmt(e[static_cast<std::size_t>(n)]));
      if (n > 0) v.require(e[static_cast<std::size_t>(n)] - e[static_cast<std::size_t>(n) - 1] == 1.0, "spacing at " + std::to_string(n));
    }
  }
  if (v.pass) v.detail = "E_n = n + 1/2 exactly, spacing 1, at N = 1, 64, 256";
  return v;
}

Verdict norm_conditions() {
  Verdict v;
  const Rational half = make_rational(1, 2);
  for (int n = 0; n < norm_levels; ++n) {
    const Rational plus = oracle::squared_norm_of_monomial({2, 0}, half, n);
    const Rational minus = oracle::squared_norm_of_monomial({0, 2}, half, n);
    const std::string at = "n=" + std::to_string(n);
    v.require(plus == Rational(n + 1) * (n + 2) / 4 && minus == Rational(n) * (n - 1) / 4, at + " oracle closed form");
    v.require(plus >= 0 && minus >= 0, at + " negative norm");
    const Rational m = (Rational(n) + half) / 2;
    const Rational kappa = make_rational(3, 16);
    v.require(plus == kappa + m * (m + 1) && minus == kappa + m * (m - 1), at + " differs from 3/16 + m(m+-1)");
    v.require(norm_condition(n) == std::make_pair(plus, minus), at + " library norms differ from oracle");
  }
  if (v.pass) v.detail = "n in [0,64): oracle norms (n+1)(n+2)/4, n(n-1)/4 >= 0 equal 3/16 + m(m+-1) exactly";
  return v;
}

Verdict erratum_entries() {
  Verdict v;
  RunConfig config;
  const Report report = cmd_verify(config);
  const Check* amplitude = nullptr;
  const Check* label_form = nullptr;
  for (const auto& c : report.checks) {
    if (c.status != CheckStatus::informational) continue;
    if (c.detail.find("1/2*sqrt(2)") != std::string::npos && c.detail.find(" sqrt(2)") != std::string::npos) amplitude = &c;
    if (c.label == "norm condition") label_form = &c;
  }
  v.require(amplitude != nullptr, "no informational K+|0> amplitude entry");
  v.require(label_form != nullptr, "no informational norm-form comparison entry");
  v.require(report.passed(), "verify report has failures");
  if (v.pass) v.detail = "informational: \"" + amplitude->name + "\" and \"" + label_form->name + "\"; suite passes";
  return v;
}

Verdict residual_suite() {
  Verdict v;
  std::string summary;
  for (int dim : residual_dims) {
    const auto report = relation_residuals(dim, residual_tol);
    double worst = 0;
    for (const auto& c : report.checks) {
      worst = std::max(worst, c.numeric_residual.value_or(1.0));
      v.require(!c.failed() && c.numeric_residual && *c.numeric_residual <= residual_tol,
                c.name + " at N=" + std::to_string(dim) + ": " + fmt(c.numeric_residual.value_or(-1)));
    }
    v.require(report.checks.size() == 16, "relation count at N=" + std::to_string(dim));
    Real outside = 0;
    for (const auto& r : standard_relations()) outside = std::max(outside, numeric_residual(r, dim).outside);
    v.require(outside > residual_tol, "no truncation residual outside the window at N=" + std::to_string(dim));
    summary += (summary.empty() ? "" : "; ") + std::string("N=") + std::to_string(dim) + " max " + fmt(worst) +
               " (outside " + fmt(static_cast<double>(outside)) + ")";
  }
  if (v.pass) v.detail = summary;
  return v;
}

Verdict property_suites() {
  Verdict v;
  const std::vector<std::pair<std::string, std::function<properties::Outcome()>>> suites = {
      {"confluence", [] { return properties::confluence(); }},
      {"ring axioms", [] { return properties::ring_axioms(); }},
      {"graded antisymmetry", [] { return properties::graded_antisymmetry(); }},
      {"adjoint/transpose", [] { return properties::adjoint_transpose(); }},
      {"to_matrix vs ladder_amplitude", [] { return properties::matrix_vs_amplitude(); }},
  };
  std::string summary;
  for (const auto& [name, run] : suites) {
    const auto o = run();
    v.require(o.cases >= 1000, name + " ran " + std::to_string(o.cases) + " cases");
    v.require(o.passed(), name + ": " + std::to_string(o.failures) + " failures, first " + o.first_failure);
    summary += (summary.empty() ? "" : ", ") + name + " " + std::to_string(o.cases - o.failures) + "/" +
               std::to_string(o.cases);
  }
  if (v.pass) v.detail = summary;
  return v;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria = {
      {"symbolic relation suite", symbolic_suite},
      {"Casimir value", casimir_value},
      {"closure and necessity", closure_necessity},
      {"graded Jacobi", jacobi},
      {"orbit structure", orbits},
      {"spectrum", spectrum_levels},
      {"norm conditions", norm_conditions},
      {"informational erratum entries", erratum_entries},
      {"numeric residual suite", residual_suite},
      {"property suites", property_suites},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Verdict v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    failures += v.pass ? 0 : 1;
    std::cout << (v.pass ? "PASS" : "FAIL") << "  AC" << i + 1 << "  " << criteria[i].first << ": " << v.detail << "\n";
  }
  std::cout << (failures == 0 ? "all acceptance criteria pass" : std::to_string(failures) + " criteria failed") << "\n";
  return failures == 0 ? 0 : 1;
}
