#ifndef SGA_REPORT_IO_HPP
#define SGA_REPORT_IO_HPP

#include "sga/fock.hpp"
#include "sga/report.hpp"
#include "sga/superalgebra.hpp"

#include <json.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sga {

inline constexpr int report_schema_version = 1;
inline constexpr const char* exact_zero_marker = "0 (exact)";

enum class OutputFormat { text, json };

inline const char* to_string(OutputFormat f) { return f == OutputFormat::json ? "json" : "text"; }

struct RunConfig {
  int dim = 64;
  double hbar_omega = 1.0;
  double tolerance = 1e-12;
  OutputFormat format = OutputFormat::text;
  int seed_state = 0;
  std::string generator_set;  // predefined set name or comma-separated operator names
  std::size_t max_dim = default_max_dim;
  BracketMode mode = BracketMode::graded;

  friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

struct StructureEntry {
  std::string left;
  std::string right;
  BracketKind kind = BracketKind::commutator;
  std::vector<std::pair<std::string, Coefficient>> result;  // nonzero coordinates only
  bool derived = false;  // filled in from the mirrored pair by graded antisymmetry

  friend bool operator==(const StructureEntry&, const StructureEntry&) = default;
};

struct BasisEntry {
  std::string name;
  std::string polynomial;
  Parity parity = Parity::even;

  friend bool operator==(const BasisEntry&, const BasisEntry&) = default;
};

struct ClosureSummary {
  BracketMode mode = BracketMode::graded;
  std::vector<std::string> seed;
  std::vector<BasisEntry> basis;
  std::vector<std::string> added;
  int generations = 0;

  friend bool operator==(const ClosureSummary&, const ClosureSummary&) = default;
};

struct SpectrumRow {
  int n = 0;
  double energy = 0;
  Rational k3;
  int parity = 1;
  Rational norm_plus;
  Rational norm_minus;

  friend bool operator==(const SpectrumRow&, const SpectrumRow&) = default;
};

/// Everything a subcommand emits.
struct Report {
  int version = report_schema_version;
  std::string command;
  RunConfig config;
  std::vector<Check> checks;
  std::optional<Rational> casimir;
  std::optional<std::vector<OrbitReport>> orbits;
  std::optional<std::vector<StructureEntry>> structure;
  std::optional<ClosureSummary> closure;
  std::optional<std::vector<SpectrumRow>> spectrum;

  bool passed() const {
    return std::none_of(checks.begin(), checks.end(), [](const Check& c) { return c.failed(); });
  }

  friend bool operator==(const Report&, const Report&) = default;
};

namespace io {

using nlohmann::json;

template <class Enum>
Enum parse_enum(const std::string& text, std::initializer_list<Enum> values) {
  for (Enum v : values) {
    if (text == to_string(v)) return v;
  }
  throw std::invalid_argument("unrecognized value: " + text);
}

inline json to_json(const RunConfig& c) {
  return {{"dim", c.dim},
          {"hbar_omega", c.hbar_omega},
          {"tolerance", c.tolerance},
          {"format", to_string(c.format)},
          {"seed", c.seed_state},
          {"set", c.generator_set},
          {"max_dim", c.max_dim},
          {"mode", to_string(c.mode)}};
}

inline RunConfig config_from_json(const json& j) {
  RunConfig c;
  c.dim = j.at("dim").get<int>();
  c.hbar_omega = j.at("hbar_omega").get<double>();
  c.tolerance = j.at("tolerance").get<double>();
  c.format = parse_enum(j.at("format").get<std::string>(), {OutputFormat::text, OutputFormat::json});
  c.seed_state = j.at("seed").get<int>();
  c.generator_set = j.at("set").get<std::string>();
  c.max_dim = j.at("max_dim").get<std::size_t>();
  c.mode = parse_enum(j.at("mode").get<std::string>(), {BracketMode::graded, BracketMode::commutator_only});
  return c;
}

inline json to_json(const Check& c) {
  json residual;
  if (c.numeric_residual) {
    residual = *c.numeric_residual;
  } else if (!c.exact_residual.empty()) {
    residual = c.exact_residual;
  } else if (c.status != CheckStatus::informational) {
    residual = exact_zero_marker;
  }
  return {{"name", c.name},   {"label", c.label},       {"mode", to_string(c.mode)},
          {"status", to_string(c.status)}, {"residual", residual}, {"detail", c.detail}};
}

inline Check check_from_json(const json& j) {
  Check c;
  c.name = j.at("name").get<std::string>();
  c.label = j.at("label").get<std::string>();
  c.mode = parse_enum(j.at("mode").get<std::string>(), {CheckMode::symbolic, CheckMode::numeric});
  c.status = parse_enum(j.at("status").get<std::string>(),
                        {CheckStatus::pass, CheckStatus::fail, CheckStatus::informational});
  const json& residual = j.at("residual");
  if (residual.is_number()) {
    c.numeric_residual = residual.get<double>();
  } else if (residual.is_string() && residual.get<std::string>() != exact_zero_marker) {
    c.exact_residual = residual.get<std::string>();
  }
  c.detail = j.at("detail").get<std::string>();
  return c;
}

inline json to_json(const OrbitReport& o) {
  return {{"seed", o.seed},
          {"generators", o.generator_names},
          {"trusted", o.trusted},
          {"reachable", std::vector<int>(o.reachable.begin(), o.reachable.end())},
          {"partition", o.partition},
          {"orbit_count", o.partition.size()}};
}

inline OrbitReport orbit_from_json(const json& j) {
  OrbitReport o;
  o.seed = j.at("seed").get<int>();
  o.generator_names = j.at("generators").get<std::vector<std::string>>();
  o.trusted = j.at("trusted").get<int>();
  const auto reachable = j.at("reachable").get<std::vector<int>>();
  o.reachable = std::set<int>(reachable.begin(), reachable.end());
  o.partition = j.at("partition").get<std::vector<std::vector<int>>>();
  return o;
}

inline json to_json(const StructureEntry& e) {
  json result = json::array();
  for (const auto& [name, c] : e.result) result.push_back({{"element", name}, {"coefficient", c.str()}});
  return {{"left", e.left}, {"right", e.right}, {"kind", to_string(e.kind)}, {"result", result}, {"derived", e.derived}};
}

inline StructureEntry structure_from_json(const json& j) {
  StructureEntry e;
  e.left = j.at("left").get<std::string>();
  e.right = j.at("right").get<std::string>();
  e.kind = parse_enum(j.at("kind").get<std::string>(), {BracketKind::commutator, BracketKind::anticommutator});
  for (const auto& r : j.at("result")) {
    e.result.emplace_back(r.at("element").get<std::string>(), parse_coefficient(r.at("coefficient").get<std::string>()));
  }
  e.derived = j.at("derived").get<bool>();
  return e;
}

inline json to_json(const ClosureSummary& s) {
  json basis = json::array();
  for (const auto& b : s.basis) {
    basis.push_back({{"name", b.name}, {"polynomial", b.polynomial}, {"parity", to_string(b.parity)}});
  }
  return {{"mode", to_string(s.mode)}, {"seed", s.seed},
          {"basis", basis},            {"dimension", s.basis.size()},
          {"added", s.added},          {"generations", s.generations}};
}

inline ClosureSummary closure_from_json(const json& j) {
  ClosureSummary s;
  s.mode = parse_enum(j.at("mode").get<std::string>(), {BracketMode::graded, BracketMode::commutator_only});
  s.seed = j.at("seed").get<std::vector<std::string>>();
  for (const auto& b : j.at("basis")) {
    s.basis.push_back({b.at("name").get<std::string>(), b.at("polynomial").get<std::string>(),
                       parse_enum(b.at("parity").get<std::string>(), {Parity::even, Parity::odd})});
  }
  s.added = j.at("added").get<std::vector<std::string>>();
  s.generations = j.at("generations").get<int>();
  return s;
}

inline json to_json(const SpectrumRow& r) {
  return {{"n", r.n},
          {"E", r.energy},
          {"k3", sga::to_string(r.k3)},
          {"parity", r.parity},
          {"norm_plus", sga::to_string(r.norm_plus)},
          {"norm_minus", sga::to_string(r.norm_minus)}};
}

inline SpectrumRow spectrum_from_json(const json& j) {
  return {j.at("n").get<int>(),
          j.at("E").get<double>(),
          parse_rational(j.at("k3").get<std::string>()),
          j.at("parity").get<int>(),
          parse_rational(j.at("norm_plus").get<std::string>()),
          parse_rational(j.at("norm_minus").get<std::string>())};
}

}  // namespace io

inline nlohmann::json to_json(const Report& r) {
  using nlohmann::json;
  json j;
  j["version"] = r.version;
  j["command"] = r.command;
  j["config"] = io::to_json(r.config);
  j["checks"] = json::array();
  for (const auto& c : r.checks) j["checks"].push_back(io::to_json(c));
  j["casimir"] = r.casimir ? json(to_string(*r.casimir)) : json(nullptr);
  if (r.orbits) {
    j["orbits"] = json::array();
    for (const auto& o : *r.orbits) j["orbits"].push_back(io::to_json(o));
  }
  if (r.structure) {
    j["structure"] = json::array();
    for (const auto& e : *r.structure) j["structure"].push_back(io::to_json(e));
  }
  if (r.closure) j["closure"] = io::to_json(*r.closure);
  if (r.spectrum) {
    j["spectrum"] = json::array();
    for (const auto& row : *r.spectrum) j["spectrum"].push_back(io::to_json(row));
  }
  return j;
}

inline Report report_from_json(const nlohmann::json& j) {
  Report r;
  r.version = j.at("version").get<int>();
  if (r.version != report_schema_version) {
    throw std::invalid_argument("unsupported report version " + std::to_string(r.version));
  }
  r.command = j.at("command").get<std::string>();
  r.config = io::config_from_json(j.at("config"));
  for (const auto& c : j.at("checks")) r.checks.push_back(io::check_from_json(c));
  if (!j.at("casimir").is_null()) r.casimir = parse_rational(j.at("casimir").get<std::string>());
  if (j.contains("orbits")) {
    r.orbits.emplace();
    for (const auto& o : j.at("orbits")) r.orbits->push_back(io::orbit_from_json(o));
  }
  if (j.contains("structure")) {
    r.structure.emplace();
    for (const auto& e : j.at("structure")) r.structure->push_back(io::structure_from_json(e));
  }
  if (j.contains("closure")) r.closure = io::closure_from_json(j.at("closure"));
  if (j.contains("spectrum")) {
    r.spectrum.emplace();
    for (const auto& row : j.at("spectrum")) r.spectrum->push_back(io::spectrum_from_json(row));
  }
  return r;
}

}  // namespace sga

#endif  // SGA_REPORT_IO_HPP
