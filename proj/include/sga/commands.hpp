#ifndef SGA_COMMANDS_HPP
#define SGA_COMMANDS_HPP

#include "sga/fock.hpp"
#include "sga/relations.hpp"
#include "sga/report.hpp"
#include "sga/report_io.hpp"
#include "sga/superalgebra.hpp"
#include "sga/weyl.hpp"

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace sga {

/// Invalid run configuration; reported with usage text and exit status 2.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// so21 = {K+,K-,K3}, osp = all five, minimal = {K3,Q,Qdag}, heisenberg = {Q,Qdag,1};
/// anything else is read as a comma-separated list of operator names.
inline std::vector<NamedElement> resolve_generator_set(const std::string& set) {
  std::vector<std::string> names;
  if (set == "so21") {
    names = {"K+", "K-", "K3"};
  } else if (set == "osp") {
    names = {"K+", "K-", "K3", "Q", "Qdag"};
  } else if (set == "minimal") {
    names = {"K3", "Q", "Qdag"};
  } else if (set == "heisenberg") {
    names = {"Q", "Qdag", "1"};
  } else {
    std::stringstream in(set);
    for (std::string name; std::getline(in, name, ',');) {
      if (!name.empty()) names.push_back(name);
    }
  }
  if (names.empty()) throw ConfigError("empty generator set");
  std::vector<NamedElement> out;
  try {
    for (const auto& n : names) out.push_back(named_element(n));
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  return out;
}

inline std::vector<NamedPolynomial> as_polynomials(const std::vector<NamedElement>& elements) {
  std::vector<NamedPolynomial> out;
  for (const auto& e : elements) out.push_back({e.name, e.poly()});
  return out;
}

namespace detail {

inline void validate_common(const RunConfig& c) {
  if (c.dim < 1) throw ConfigError("--dim must be at least 1");
  if (!(c.hbar_omega > 0)) throw ConfigError("--hbar-omega must be positive");
  if (!(c.tolerance > 0)) throw ConfigError("--tol must be positive");
}

inline Check symbolic_check(std::string name, std::string label, bool ok, std::string residual = {},
                            std::string detail = {}) {
  return Check{std::move(name), std::move(label),   CheckMode::symbolic, ok ? CheckStatus::pass : CheckStatus::fail,
               std::nullopt,    ok ? "" : residual, std::move(detail)};
}

inline Check informational(std::string name, std::string label, std::string detail) {
  return Check{std::move(name), std::move(label), CheckMode::symbolic, CheckStatus::informational, std::nullopt, "",
               std::move(detail)};
}

inline std::string join(const std::vector<std::string>& parts, const std::string& sep = ", ") {
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "" : sep) + p;
  return out;
}

inline std::vector<std::string> failing_names(const VerificationReport& r) {
  std::vector<std::string> out;
  for (const auto& c : r.checks) {
    if (c.failed()) out.push_back(c.name);
  }
  return out;
}

inline bool partition_matches_parity(const OrbitReport& o) {
  if (o.partition.size() != 2) return false;
  for (const auto& block : o.partition) {
    const int parity = block.front() % 2;
    for (int n : block) {
      if (n % 2 != parity) return false;
    }
  }
  return o.partition[0].size() + o.partition[1].size() == static_cast<std::size_t>(o.trusted);
}

}  // namespace detail

/// Symbolic relations, Casimir, graded Jacobi, closure, numeric residuals,
/// norm conditions and orbit structure, plus two informational comparisons
/// against closed forms that drop the K3 normalization.
inline Report cmd_verify(const RunConfig& config) {
  detail::validate_common(config);
  if (trusted_window(config.dim, 4) < 1) {
    throw ConfigError("--dim " + std::to_string(config.dim) + " leaves no trusted window for the quartic Casimir check (need dim > 8)");
  }
  Report report;
  report.command = "verify";
  report.config = config;
  auto& checks = report.checks;
  const std::string closure_label = "bracket closure";

  auto symbolic = symbolic_relation_suite();
  checks.insert(checks.end(), symbolic.checks.begin(), symbolic.checks.end());

  const WeylPolynomial k2 = casimir();
  {
    std::vector<std::string> offenders;
    for (const auto& g : standard_generators()) {
      if (!commutator(k2, g.poly()).is_zero()) offenders.push_back(g.name);
    }
    checks.push_back(detail::symbolic_check("K^2 commutes with K+, K-, K3, Q, Qdag", "casimir", offenders.empty(),
                                            "fails for " + detail::join(offenders)));
  }
  if (k2.is_constant()) report.casimir = k2.coefficient({0, 0}).rational_part();

  const AlgebraBasis osp(standard_generators());
  {
    const auto poly_route = graded_jacobi_check(osp);
    checks.push_back(detail::symbolic_check("graded Jacobi identity on polynomials", "graded Jacobi identity",
                                            poly_route.passed(), detail::join(detail::failing_names(poly_route)),
                                            std::to_string(poly_route.checks.size()) + " triples"));
    const auto tensor_route = graded_jacobi_check(structure_constants(osp));
    checks.push_back(detail::symbolic_check("graded Jacobi identity on structure constants", "graded Jacobi identity",
                                            tensor_route.passed(), detail::join(detail::failing_names(tensor_route)),
                                            std::to_string(tensor_route.checks.size()) + " triples"));
  }

  {
    const auto minimal = resolve_generator_set("minimal");
    const auto graded = close_under_bracket(minimal, BracketMode::graded, config.max_dim);
    checks.push_back(detail::symbolic_check(
        "closure of {K3,Q,Qdag} under the graded bracket is the five-generator superalgebra", closure_label,
        graded.basis.size() == 5 && same_span(graded.basis, osp), "dimension " + std::to_string(graded.basis.size()),
        "added " + detail::join(graded.added)));
    const auto plain = close_under_bracket(minimal, BracketMode::commutator_only, config.max_dim);
    checks.push_back(detail::symbolic_check(
        "closure of {K3,Q,Qdag} under commutators is {K3,Q,Qdag,1}", closure_label,
        plain.basis.size() == 4 && plain.basis.contains(WeylPolynomial::identity()),
        "dimension " + std::to_string(plain.basis.size()), "added " + detail::join(plain.added)));
    const auto so21 = close_under_bracket(resolve_generator_set("so21"), BracketMode::graded, config.max_dim);
    checks.push_back(detail::symbolic_check("so(2,1) is closed", closure_label, so21.added.empty(),
                                            "added " + detail::join(so21.added)));
  }

  auto numeric = relation_residuals(config.dim, config.tolerance);
  checks.insert(checks.end(), numeric.checks.begin(), numeric.checks.end());

  {
    std::string mismatch;
    for (int n = 0; n < config.dim && mismatch.empty(); ++n) {
      const auto norms = norm_condition(n);
      const auto expected = casimir_norm_form(n);
      if (norms.first < 0 || norms.second < 0 || norms != expected) {
        mismatch = "n=" + std::to_string(n) + ": " + to_string(norms.first) + ", " + to_string(norms.second);
      }
    }
    checks.push_back(detail::symbolic_check("||K+-|n>||^2 = 3/16 + m(m+-1) >= 0 for n < " + std::to_string(config.dim),
                                            "norm condition", mismatch.empty(), mismatch,
                                            "m = K3 eigenvalue (n + 1/2)/2"));
  }

  {
    const auto so21 = orbit(0, as_polynomials(resolve_generator_set("so21")), config.dim);
    checks.push_back(detail::symbolic_check("so(2,1) splits the window into the two parity sectors", "orbit structure",
                                            detail::partition_matches_parity(so21),
                                            std::to_string(so21.partition.size()) + " orbits",
                                            std::to_string(so21.partition.size()) + " orbits on window " +
                                                std::to_string(so21.trusted)));
    const auto osp_orbit = orbit(0, as_polynomials(resolve_generator_set("osp")), config.dim);
    checks.push_back(detail::symbolic_check("osp(2,1;2) reaches the whole window from every state", "orbit structure",
                                            osp_orbit.partition.size() == 1,
                                            std::to_string(osp_orbit.partition.size()) + " orbits",
                                            "1 orbit on window " + std::to_string(osp_orbit.trusted)));
  }

  {
    const auto image = ladder_amplitude(generators::raising(), 0);
    const std::string exact = image.empty() ? "0" : "|" + std::to_string(image.begin()->first) + "> coefficient " +
                                                        image.begin()->second.str();
    const ExactAmplitude closed_form = ExactAmplitude::sqrt_of(2);
    checks.push_back(detail::informational(
        "K+|0> amplitude vs sqrt((n+1)(n+2))", "ladder amplitude",
        "exact " + exact + "; unnormalized closed form sqrt((n+1)(n+2)) gives " + closed_form.str() +
            " (differs by the 1/2 in K+ = ad^2/2)"));
    std::string rows;
    for (int n = 0; n < 4; ++n) {
      const auto weight_form = casimir_norm_form(n);
      const auto label_form = fock_label_norm_form(n);
      rows += (rows.empty() ? "" : "; ") + std::string("n=") + std::to_string(n) + ": m=" +
              to_string(weight_eigenvalue(n)) + " gives (" + to_string(weight_form.first) + ", " +
              to_string(weight_form.second) + "), Fock label gives (" + to_string(label_form.first) + ", " +
              to_string(label_form.second) + ")";
    }
    checks.push_back(detail::informational("3/16 + x(x+-1) with x = K3 eigenvalue vs x = Fock label",
                                           "norm condition", rows));
  }
  return report;
}

/// Bracket closure of config.generator_set (default: minimal) in config.mode.
inline Report cmd_closure(const RunConfig& config) {
  RunConfig c = config;
  if (c.generator_set.empty()) c.generator_set = "minimal";
  const auto seed = resolve_generator_set(c.generator_set);
  if (c.max_dim < seed.size()) throw ConfigError("--max-dim is smaller than the seed");
  ClosureResult result;
  try {
    result = close_under_bracket(seed, c.mode, c.max_dim);
  } catch (const ClosureBoundExceeded&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  Report report;
  report.command = "closure";
  report.config = c;
  ClosureSummary summary;
  summary.mode = c.mode;
  for (const auto& e : seed) summary.seed.push_back(e.name);
  for (const auto& e : result.basis) summary.basis.push_back({e.name, e.poly().str(), e.element.parity()});
  summary.added = result.added;
  summary.generations = result.generations;
  report.closure = std::move(summary);
  return report;
}

/// Orbit of |seed> under config.generator_set (default: osp).
inline Report cmd_orbit(const RunConfig& config) {
  detail::validate_common(config);
  RunConfig c = config;
  if (c.generator_set.empty()) c.generator_set = "osp";
  const auto generators = as_polynomials(resolve_generator_set(c.generator_set));
  Report report;
  report.command = "orbit";
  report.config = c;
  try {
    report.orbits = std::vector<OrbitReport>{orbit(c.seed_state, generators, c.dim)};
  } catch (const std::out_of_range& e) {
    throw ConfigError(e.what());
  }
  return report;
}

/// Graded structure constants of the closure of config.generator_set (default: osp).
inline Report cmd_structure(const RunConfig& config) {
  RunConfig c = config;
  if (c.generator_set.empty()) c.generator_set = "osp";
  AlgebraBasis basis;
  try {
    basis = close_under_bracket(resolve_generator_set(c.generator_set), BracketMode::graded, c.max_dim).basis;
  } catch (const ClosureBoundExceeded&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  const StructureConstants sc = structure_constants(basis);
  std::vector<StructureEntry> entries;
  for (std::size_t i = 0; i < sc.size(); ++i) {
    for (std::size_t j = 0; j < sc.size(); ++j) {
      StructureEntry e{sc.names[i], sc.names[j], sc.kind[i][j], {}, i > j};
      for (std::size_t k = 0; k < sc.size(); ++k) {
        // Mirrored pairs are read from [j,i] via c[i][j] = -(-1)^{|i||j|} c[j][i].
        const Coefficient value =
            e.derived ? Coefficient(-grading_sign(sc.parities[i], sc.parities[j])) * sc(j, i, k) : sc(i, j, k);
        if (!value.is_zero()) e.result.emplace_back(sc.names[k], value);
      }
      entries.push_back(std::move(e));
    }
  }
  Report report;
  report.command = "structure";
  report.config = c;
  report.structure = std::move(entries);
  return report;
}

/// Per level: energy, K3 eigenvalue, parity and the exact norm-condition pair.
inline Report cmd_spectrum(const RunConfig& config) {
  detail::validate_common(config);
  const auto energies = spectrum(config.dim, config.hbar_omega);
  std::vector<SpectrumRow> rows;
  for (int n = 0; n < config.dim; ++n) {
    const auto [plus, minus] = norm_condition(n);
    rows.push_back({n, energies[static_cast<std::size_t>(n)], weight_eigenvalue(n), n % 2 == 0 ? 1 : -1, plus, minus});
  }
  Report report;
  report.command = "spectrum";
  report.config = config;
  report.spectrum = std::move(rows);
  return report;
}

namespace detail {

/// "0, 2, 4, ..., 58" style summary of an index set.
inline std::string describe_indices(const std::vector<int>& v) {
  if (v.empty()) return "{}";
  if (v.size() <= 6) {
    std::string out;
    for (int n : v) out += (out.empty() ? "" : ", ") + std::to_string(n);
    return "{" + out + "}";
  }
  const int step = v[1] - v[0];
  bool arithmetic = true;
  for (std::size_t i = 1; i < v.size(); ++i) arithmetic = arithmetic && v[i] - v[i - 1] == step;
  if (arithmetic) {
    return "{" + std::to_string(v[0]) + ", " + std::to_string(v[1]) + ", " + std::to_string(v[2]) + ", ..., " +
           std::to_string(v.back()) + "}";
  }
  return "{" + std::to_string(v[0]) + ", " + std::to_string(v[1]) + ", ..., " + std::to_string(v.back()) + "}";
}

inline std::string render_structure_value(const StructureEntry& e) {
  if (e.result.empty()) return "0";
  std::string out;
  for (const auto& [name, c] : e.result) {
    std::string coeff = c.str();
    if (!c.is_rational() && c.rational_part() != 0) coeff = "(" + coeff + ")";
    std::string term = coeff == "1" ? name : coeff == "-1" ? "-" + name : coeff + " " + name;
    if (!out.empty()) {
      if (term.front() == '-') {
        out += " - ";
        term.erase(0, 1);
      } else {
        out += " + ";
      }
    }
    out += term;
  }
  return out;
}

}  // namespace detail

inline std::string render_spectrum_csv(const std::vector<SpectrumRow>& rows) {
  std::ostringstream out;
  out << "n,E,k3,parity,norm_plus,norm_minus\n";
  for (const auto& r : rows) {
    out << r.n << ',' << format_real(r.energy) << ',' << to_string(r.k3) << ',' << (r.parity > 0 ? '+' : '-') << ','
        << to_string(r.norm_plus) << ',' << to_string(r.norm_minus) << '\n';
  }
  return out.str();
}

inline std::string render_text(const Report& r) {
  std::ostringstream out;
  if (r.command == "spectrum" && r.spectrum) return render_spectrum_csv(*r.spectrum);

  if (!r.checks.empty()) {
    out << r.command << ": dim=" << r.config.dim << " tol=" << format_real(r.config.tolerance) << "\n";
    for (const auto& c : r.checks) {
      const char* status = c.status == CheckStatus::pass ? "PASS" : c.status == CheckStatus::fail ? "FAIL" : "INFO";
      out << status << "  " << (c.mode == CheckMode::symbolic ? "symbolic" : "numeric ") << "  " << c.name;
      if (c.numeric_residual) {
        out << "  residual " << format_real(*c.numeric_residual);
      } else if (c.status != CheckStatus::informational) {
        out << "  " << (c.exact_residual.empty() ? exact_zero_marker : "residual " + c.exact_residual);
      }
      if (!c.detail.empty()) out << "  [" << c.detail << "]";
      out << "\n";
    }
    if (r.casimir) out << "casimir eigenvalue: " << to_string(*r.casimir) << "\n";
    std::size_t failures = 0;
    for (const auto& c : r.checks) failures += c.failed() ? 1 : 0;
    out << "result: " << (failures == 0 ? "PASS" : "FAIL") << " (" << r.checks.size() << " checks, " << failures
        << " failures)\n";
  }

  if (r.closure) {
    const auto& s = *r.closure;
    out << "closure (" << to_string(s.mode) << ") of " << detail::join(s.seed) << "\n";
    for (const auto& b : s.basis) {
      const bool added = std::find(s.added.begin(), s.added.end(), b.name) != s.added.end();
      out << "  " << b.name << "  " << to_string(b.parity) << "  " << b.polynomial << (added ? "  (generated)" : "")
          << "\n";
    }
    out << "dimension: " << s.basis.size() << "\n";
    out << "generations: " << s.generations << "\n";
    out << "added: " << (s.added.empty() ? "none" : detail::join(s.added)) << "\n";
  }

  if (r.orbits) {
    for (const auto& o : *r.orbits) {
      out << "orbit of |" << o.seed << "> under " << detail::join(o.generator_names) << " (trusted window "
          << o.trusted << " of " << r.config.dim << ")\n";
      const std::vector<int> reachable(o.reachable.begin(), o.reachable.end());
      out << "reachable: " << reachable.size() << " states " << detail::describe_indices(reachable) << "\n";
      out << "orbits: " << o.partition.size();
      if (o.partition.size() == 1) {
        out << " (complete orbit)";
      } else if (detail::partition_matches_parity(o)) {
        out << " (even and odd parity sectors)";
      }
      out << "\n";
      const std::size_t shown = std::min<std::size_t>(o.partition.size(), 8);
      for (std::size_t i = 0; i < shown; ++i) {
        out << "  block " << i + 1 << ": " << o.partition[i].size() << " states "
            << detail::describe_indices(o.partition[i]) << "\n";
      }
      if (shown < o.partition.size()) out << "  ... " << o.partition.size() - shown << " more blocks\n";
    }
  }

  if (r.structure) {
    for (const auto& e : *r.structure) {
      const bool anti = e.kind == BracketKind::anticommutator;
      out << (anti ? "{" : "[") << e.left << "," << e.right << (anti ? "}" : "]") << " = "
          << detail::render_structure_value(e) << (e.derived ? "  (mirrored)" : "") << "\n";
    }
  }
  return out.str();
}

inline std::string render(const Report& r) {
  if (r.config.format == OutputFormat::json) return to_json(r).dump(2) + "\n";
  return render_text(r);
}

}  // namespace sga

#endif  // SGA_COMMANDS_HPP
