#ifndef SGA_RELATIONS_HPP
#define SGA_RELATIONS_HPP

#include "sga/fock.hpp"
#include "sga/report.hpp"
#include "sga/superalgebra.hpp"
#include "sga/weyl.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace sga {

/// One defining identity of the oscillator superalgebra: bracket(left, right) = expected,
/// or (for the Casimir entry) K^2 = expected.
struct Relation {
  enum class Kind { bracket, casimir };

  std::string name;
  std::string label;
  Kind kind = Kind::bracket;
  BracketKind bracket = BracketKind::commutator;
  WeylPolynomial left;
  WeylPolynomial right;
  WeylPolynomial expected;

  /// Largest total degree among the matrices multiplied or compared.
  unsigned operand_degree() const {
    if (kind == Kind::casimir) return 4;  // K+K-, K-K+ and K3 K3 are quartic
    return std::max({left.degree(), right.degree(), expected.degree()});
  }

  WeylPolynomial lhs() const {
    if (kind == Kind::casimir) return casimir();
    return bracket == BracketKind::commutator ? commutator(left, right) : anticommutator(left, right);
  }

  WeylPolynomial residual() const { return lhs() - expected; }
};

/// The sixteen identities: so(2,1) commutators, the anticommutator realizations
/// of the K's in terms of a and ad, the weights and rotations of the odd
/// doublet, the odd anticommutators, and the Casimir value.
inline std::vector<Relation> standard_relations() {
  using namespace generators;
  using K = BracketKind;
  const auto kp = raising(), km = lowering(), k3 = weight(), q = odd_lowering(), qd = odd_raising();
  const auto a = WeylPolynomial::annihilation(), ad = WeylPolynomial::creation();
  const Coefficient half(make_rational(1, 2));
  auto rel = [](std::string name, std::string label, K kind, WeylPolynomial l, WeylPolynomial r, WeylPolynomial e) {
    return Relation{std::move(name), std::move(label), Relation::Kind::bracket, kind, std::move(l), std::move(r), std::move(e)};
  };
  const std::string so21 = "so(2,1) commutators";
  const std::string realization = "anticommutator realization";
  const std::string weights = "odd doublet weights";
  const std::string rotations = "odd doublet rotations";
  const std::string odd = "odd anticommutators";
  return {
      rel("[K3,K+] = +K+", so21, K::commutator, k3, kp, kp),
      rel("[K3,K-] = -K-", so21, K::commutator, k3, km, -km),
      rel("[K+,K-] = -2K3", so21, K::commutator, kp, km, Coefficient(-2) * k3),
      rel("{a,a} = 4K-", realization, K::anticommutator, a, a, Coefficient(4) * km),
      rel("{ad,ad} = 4K+", realization, K::anticommutator, ad, ad, Coefficient(4) * kp),
      rel("{a,ad} = 4K3", realization, K::anticommutator, a, ad, Coefficient(4) * k3),
      rel("[K3,Qdag] = +1/2 Qdag", weights, K::commutator, k3, qd, half * qd),
      rel("[K3,Q] = -1/2 Q", weights, K::commutator, k3, q, -(half * q)),
      rel("[K+,Qdag] = 0", rotations, K::commutator, kp, qd, WeylPolynomial()),
      rel("[K+,Q] = -Qdag", rotations, K::commutator, kp, q, -qd),
      rel("[K-,Qdag] = +Q", rotations, K::commutator, km, qd, q),
      rel("[K-,Q] = 0", rotations, K::commutator, km, q, WeylPolynomial()),
      rel("{Q,Qdag} = 2K3", odd, K::anticommutator, q, qd, Coefficient(2) * k3),
      rel("{Qdag,Qdag} = 2K+", odd, K::anticommutator, qd, qd, Coefficient(2) * kp),
      rel("{Q,Q} = 2K-", odd, K::anticommutator, q, q, Coefficient(2) * km),
      Relation{"K^2 = 3/16", "casimir", Relation::Kind::casimir, K::commutator, {}, {}, Coefficient(make_rational(3, 16))},
  };
}

inline VerificationReport symbolic_relation_suite() {
  VerificationReport report;
  for (const auto& r : standard_relations()) {
    const WeylPolynomial residual = r.residual();
    report.checks.push_back(Check{r.name, r.label, CheckMode::symbolic,
                                  residual.is_zero() ? CheckStatus::pass : CheckStatus::fail, std::nullopt,
                                  residual.is_zero() ? "" : residual.str(), ""});
  }
  return report;
}

struct NumericResidual {
  int window = 0;
  Real inside = 0;   // max |entry| over rows and columns < window
  Real outside = 0;  // max |entry| over the remaining entries
};

/// Matrix-product residual of a relation at truncation dim.
inline NumericResidual numeric_residual(const Relation& r, int dim) {
  RealMatrix lhs;
  if (r.kind == Relation::Kind::casimir) {
    using namespace generators;
    const RealMatrix kp = to_matrix(raising(), dim).entries;
    const RealMatrix km = to_matrix(lowering(), dim).entries;
    const RealMatrix k3 = to_matrix(weight(), dim).entries;
    lhs = Real(0.5) * (kp * km + km * kp) - k3 * k3;
  } else {
    const RealMatrix x = to_matrix(r.left, dim).entries;
    const RealMatrix y = to_matrix(r.right, dim).entries;
    lhs = r.bracket == BracketKind::commutator ? RealMatrix(x * y - y * x) : RealMatrix(x * y + y * x);
  }
  const RealMatrix diff = lhs - to_matrix(r.expected, dim).entries;
  NumericResidual out;
  out.window = trusted_window(dim, r.operand_degree());
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      const Real v = std::abs(diff(i, j));
      Real& slot = i < out.window && j < out.window ? out.inside : out.outside;
      slot = std::max(slot, v);
    }
  }
  return out;
}

/// Numeric residuals of the relations at truncation dim, each restricted to its trusted window.
inline VerificationReport relation_residuals(int dim, double tolerance = 1e-12, bool include_casimir = true) {
  VerificationReport report;
  for (const auto& r : standard_relations()) {
    if (r.kind == Relation::Kind::casimir && !include_casimir) continue;
    if (trusted_window(dim, r.operand_degree()) == 0) {
      throw std::invalid_argument("empty trusted window for " + r.name + " at dim " + std::to_string(dim));
    }
    const NumericResidual res = numeric_residual(r, dim);
    const double inside = static_cast<double>(res.inside);
    Check check{r.name, r.label, CheckMode::numeric, inside <= tolerance ? CheckStatus::pass : CheckStatus::fail,
                inside, "", ""};
    check.detail = "window " + std::to_string(res.window) + "/" + std::to_string(dim) +
                   ", outside-window residual " + format_real(static_cast<double>(res.outside));
    report.checks.push_back(std::move(check));
  }
  return report;
}

}  // namespace sga

#endif  // SGA_RELATIONS_HPP
