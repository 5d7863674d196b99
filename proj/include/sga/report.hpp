#ifndef SGA_REPORT_HPP
#define SGA_REPORT_HPP

#include "sga/field.hpp"

#include <algorithm>
#include <charconv>
#include <optional>
#include <string>
#include <vector>

namespace sga {

/// Shortest decimal text that parses back to the same double.
inline std::string format_real(double v) {
  char buffer[64];
  auto [end, ec] = std::to_chars(buffer, buffer + sizeof buffer, v);
  return std::string(buffer, end);
}

enum class CheckMode { symbolic, numeric };
enum class CheckStatus { pass, fail, informational };

inline const char* to_string(CheckMode m) { return m == CheckMode::symbolic ? "symbolic" : "numeric"; }
inline const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass:
      return "pass";
    case CheckStatus::fail:
      return "fail";
    default:
      return "informational";
  }
}

/// Outcome of one relation or property check.
///
/// Symbolic checks record an exact residual (the residual polynomial as text,
/// or nothing when it is exactly zero); numeric checks record a floating
/// residual. `label` names the relation family the check belongs to.
struct Check {
  std::string name;
  std::string label;
  CheckMode mode = CheckMode::symbolic;
  CheckStatus status = CheckStatus::pass;
  std::optional<double> numeric_residual;
  std::string exact_residual;  // empty means exactly zero (symbolic mode)
  std::string detail;

  bool failed() const { return status == CheckStatus::fail; }
  bool exact_zero() const { return mode == CheckMode::symbolic && exact_residual.empty(); }

  friend bool operator==(const Check&, const Check&) = default;
};

struct VerificationReport {
  std::vector<Check> checks;
  std::optional<Rational> casimir_eigenvalue;

  bool passed() const {
    return std::none_of(checks.begin(), checks.end(), [](const Check& c) { return c.failed(); });
  }
  std::size_t failures() const {
    return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const Check& c) { return c.failed(); }));
  }
  void append(const VerificationReport& other) { checks.insert(checks.end(), other.checks.begin(), other.checks.end()); }
  const Check* find(const std::string& name) const {
    auto it = std::find_if(checks.begin(), checks.end(), [&](const Check& c) { return c.name == name; });
    return it == checks.end() ? nullptr : &*it;
  }

  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

}  // namespace sga

#endif  // SGA_REPORT_HPP
