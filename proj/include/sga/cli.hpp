#ifndef SGA_CLI_HPP
#define SGA_CLI_HPP

#include "sga/commands.hpp"

#include <CLI11.hpp>

#include <ostream>
#include <string>
#include <vector>

namespace sga {

enum ExitCode : int { exit_ok = 0, exit_check_failed = 1, exit_usage = 2, exit_not_closed = 3 };

/// Parses argv-style arguments, runs the selected subcommand and writes its
/// report to out. Returns the process exit status.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spectrum-generating superalgebra checks for the linear harmonic oscillator", "sga"};
  app.require_subcommand(1);

  RunConfig config;
  std::string format = "text";
  std::string mode = "graded";

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--dim", config.dim, "Fock truncation N")->check(CLI::PositiveNumber);
    sub->add_option("--hbar-omega", config.hbar_omega, "Energy scale");
    sub->add_option("--tol", config.tolerance, "Numeric residual tolerance");
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--seed", config.seed_state, "Seed Fock state for orbit");
    sub->add_option("--set", config.generator_set,
                    "Generator set: so21, osp, minimal, heisenberg, or comma-separated names (K+,K-,K3,Q,Qdag,1,a,ad)");
    sub->add_option("--max-dim", config.max_dim, "Closure dimension bound");
  };

  auto* verify = app.add_subcommand("verify", "Run the full relation, closure, orbit and residual suite");
  auto* closure = app.add_subcommand("closure", "Close a generator set under the bracket");
  auto* orbit_cmd = app.add_subcommand("orbit", "Fock-index orbit of a seed state");
  auto* structure = app.add_subcommand("structure", "Graded structure constants");
  auto* spectrum_cmd = app.add_subcommand("spectrum", "Energy levels and norm conditions");
  for (auto* sub : {verify, closure, orbit_cmd, structure, spectrum_cmd}) add_common(sub);
  closure->add_option("--mode", mode, "Bracket used for closure")->check(CLI::IsMember({"graded", "commutator-only"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return exit_usage;
  }
  config.format = format == "json" ? OutputFormat::json : OutputFormat::text;
  config.mode = mode == "graded" ? BracketMode::graded : BracketMode::commutator_only;

  CLI::App* chosen = app.get_subcommands().front();
  try {
    Report report;
    if (chosen == verify) {
      report = cmd_verify(config);
    } else if (chosen == closure) {
      report = cmd_closure(config);
    } else if (chosen == orbit_cmd) {
      report = cmd_orbit(config);
    } else if (chosen == structure) {
      report = cmd_structure(config);
    } else {
      report = cmd_spectrum(config);
    }
    out << render(report);
    return report.passed() ? exit_ok : exit_check_failed;
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n" << chosen->help();
    return exit_usage;
  } catch (const ClosureBoundExceeded& e) {
    err << "error: " << e.what() << " (generated so far: " << detail::join(e.partial().names()) << ")\n";
    return exit_not_closed;
  }
}

}  // namespace sga

#endif  // SGA_CLI_HPP
