#ifndef SGA_FOCK_HPP
#define SGA_FOCK_HPP

#include "sga/exact_amplitude.hpp"
#include "sga/weyl.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <complex>
#include <cstddef>
#include <map>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sga {

/// Scalar type of truncated matrices. Entries grow like N^2 for quadratic
/// generators, so double rounding alone would exceed 1e-12 at N = 256.
using Real = long double;
using RealMatrix = Eigen::Matrix<Real, Eigen::Dynamic, Eigen::Dynamic>;

/// Largest index range [0, trusted) on which products of operators of total
/// degree <= degree reproduce the untruncated algebra.
inline int trusted_window(int dim, unsigned degree) { return std::max(0, dim - 2 * static_cast<int>(degree)); }

/// Truncation of an operator to span{|0>, ..., |dim-1>}.
struct FockOperator {
  int dim = 0;
  RealMatrix entries;
  unsigned source_degree = 0;
  int trusted = 0;

  Real operator()(int row, int col) const { return entries(row, col); }

  /// Indices (row - col) carrying a nonzero entry.
  std::set<int> occupied_offsets() const {
    std::set<int> out;
    for (int r = 0; r < dim; ++r) {
      for (int c = 0; c < dim; ++c) {
        if (entries(r, c) != 0) out.insert(r - c);
      }
    }
    return out;
  }
};

struct FockState {
  int dim = 0;
  Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, 1> amplitudes;

  static FockState basis(int dim, int n) {
    if (n < 0 || n >= dim) throw std::out_of_range("basis index outside truncation");
    FockState s{dim, Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, 1>::Zero(dim)};
    s.amplitudes(n) = 1;
    return s;
  }

  std::complex<Real> inner(const FockState& other) const { return amplitudes.dot(other.amplitudes); }
  Real norm() const { return amplitudes.norm(); }
};

inline FockState apply(const FockOperator& op, const FockState& state) {
  if (op.dim != state.dim) throw std::invalid_argument("dimension mismatch");
  return {state.dim, op.entries.cast<std::complex<Real>>() * state.amplitudes};
}

namespace detail {

/// Integer factors of the squared amplitude <m| ad^p a^q |n>, m = n - q + p:
/// n (n-1) ... (n-q+1) from a^q, then (n-q+1) ... m from ad^p.
inline std::vector<ExactAmplitude::Radicand> ladder_factors(const LadderMonomial& mono, unsigned n) {
  std::vector<ExactAmplitude::Radicand> factors;
  for (unsigned i = 0; i < mono.annihilation; ++i) factors.push_back(n - i);
  const unsigned base = n - mono.annihilation;
  for (unsigned i = 1; i <= mono.creation; ++i) factors.push_back(base + i);
  return factors;
}

}  // namespace detail

inline FockOperator to_matrix(const WeylPolynomial& x, int dim) {
  if (dim < 1) throw std::invalid_argument("Fock truncation must be at least 1");
  FockOperator op{dim, RealMatrix::Zero(dim, dim), x.degree(), trusted_window(dim, x.degree())};
  for (const auto& [mono, coeff] : x.terms()) {
    const Real c = coeff.value<Real>();
    for (int n = static_cast<int>(mono.annihilation); n < dim; ++n) {
      const int m = n + mono.offset();
      if (m >= dim) break;
      Real squared = 1;
      for (auto f : detail::ladder_factors(mono, static_cast<unsigned>(n))) squared *= static_cast<Real>(f);
      op.entries(m, n) += c * std::sqrt(squared);
    }
  }
  return op;
}

/// Energies hbar*omega*(n + 1/2) as the eigenvalues of H = 2 K3, ascending.
inline std::vector<double> spectrum(int dim, double hbar_omega) {
  if (!(hbar_omega > 0)) throw std::invalid_argument("hbar_omega must be positive");
  const FockOperator h = to_matrix(generators::hamiltonian(), dim);
  std::vector<double> out;
  if (h.occupied_offsets() == std::set<int>{0}) {
    for (int n = 0; n < dim; ++n) out.push_back(static_cast<double>(h.entries(n, n)));
  } else {
    Eigen::SelfAdjointEigenSolver<RealMatrix> solver(h.entries, Eigen::EigenvaluesOnly);
    for (int n = 0; n < dim; ++n) out.push_back(static_cast<double>(solver.eigenvalues()(n)));
  }
  for (auto& e : out) e *= hbar_omega;
  std::sort(out.begin(), out.end());
  return out;
}

/// P|n> = (-1)^n |n>.
inline FockOperator parity_matrix(int dim) {
  if (dim < 1) throw std::invalid_argument("Fock truncation must be at least 1");
  FockOperator p{dim, RealMatrix::Zero(dim, dim), 0, dim};
  for (int n = 0; n < dim; ++n) p.entries(n, n) = n % 2 == 0 ? 1 : -1;
  return p;
}

/// (1 + P)/2 and (1 - P)/2.
inline std::pair<FockOperator, FockOperator> sector_projectors(int dim) {
  const FockOperator p = parity_matrix(dim);
  const RealMatrix id = RealMatrix::Identity(dim, dim);
  return {FockOperator{dim, (id + p.entries) / 2, 0, dim}, FockOperator{dim, (id - p.entries) / 2, 0, dim}};
}

/// Exact x|n>, grouped by target Fock index. Zero amplitudes are dropped.
inline std::map<int, ExactAmplitude> ladder_amplitude(const WeylPolynomial& x, int n) {
  if (n < 0) throw std::invalid_argument("Fock index must be non-negative");
  std::map<int, ExactAmplitude> out;
  for (const auto& [mono, coeff] : x.terms()) {
    if (static_cast<unsigned>(n) < mono.annihilation) continue;
    auto factors = detail::ladder_factors(mono, static_cast<unsigned>(n));
    ExactAmplitude term = ExactAmplitude::sqrt_of_product(factors, coeff.rational_part());
    if (coeff.scaled_part() != 0) {
      // b/sqrt(2) * sqrt(R) = (b/2) sqrt(2R)
      factors.push_back(2);
      term += ExactAmplitude::sqrt_of_product(factors, coeff.scaled_part() / 2);
    }
    out[n + mono.offset()] += term;
  }
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

inline Rational squared_norm(const std::map<int, ExactAmplitude>& state) {
  ExactAmplitude total;
  for (const auto& [index, amp] : state) total += amp * amp;
  if (!total.is_rational()) throw std::logic_error("squared norm of real amplitudes must be rational");
  return total.rational_part();
}

/// K3 eigenvalue of |n>, read off the exact diagonal amplitude.
inline Rational weight_eigenvalue(int n) {
  const auto image = ladder_amplitude(generators::weight(), n);
  if (image.size() != 1 || image.begin()->first != n || !image.begin()->second.is_rational()) {
    throw std::logic_error("K3 must act diagonally with rational eigenvalue");
  }
  return image.begin()->second.rational_part();
}

/// (||K+ |n>||^2, ||K- |n>||^2) from exact ladder amplitudes.
inline std::pair<Rational, Rational> norm_condition(int n) {
  return {squared_norm(ladder_amplitude(generators::raising(), n)),
          squared_norm(ladder_amplitude(generators::lowering(), n))};
}

/// 3/16 + m(m +- 1) with m the K3 eigenvalue of |n>.
inline std::pair<Rational, Rational> casimir_norm_form(int n) {
  const Rational m = weight_eigenvalue(n);
  const Rational kappa = make_rational(3, 16);
  return {kappa + m * (m + 1), kappa + m * (m - 1)};
}

/// 3/16 + n(n +- 1) with the Fock label substituted for the weight.
inline std::pair<Rational, Rational> fock_label_norm_form(int n) {
  const Rational kappa = make_rational(3, 16);
  const Rational label(n);
  return {kappa + label * (label + 1), kappa + label * (label - 1)};
}

struct NamedPolynomial {
  std::string name;
  WeylPolynomial poly;
};

struct OrbitReport {
  int seed = 0;
  std::vector<std::string> generator_names;
  int trusted = 0;
  std::set<int> reachable;
  std::vector<std::vector<int>> partition;  // blocks in order of their smallest index

  friend bool operator==(const OrbitReport&, const OrbitReport&) = default;
};

/// Breadth-first reachability over basis indices in the trusted window.
///
/// n -> t is an edge when some generator, or its adjoint, has a nonzero exact
/// amplitude <t|g|n>. Adjoints are included, so edges are symmetric and the
/// reachable sets partition the window.
inline OrbitReport orbit(int seed, const std::vector<NamedPolynomial>& generators, int dim) {
  if (dim < 1) throw std::invalid_argument("Fock truncation must be at least 1");
  unsigned degree = 0;
  for (const auto& g : generators) degree = std::max(degree, g.poly.degree());
  const int window = trusted_window(dim, degree);
  if (seed < 0 || seed >= window) {
    throw std::out_of_range("seed " + std::to_string(seed) + " outside trusted window [0, " + std::to_string(window) + ")");
  }

  std::vector<WeylPolynomial> moves;
  for (const auto& g : generators) {
    moves.push_back(g.poly);
    moves.push_back(adjoint(g.poly));
  }
  std::vector<std::vector<int>> edges(static_cast<std::size_t>(window));
  for (int n = 0; n < window; ++n) {
    for (const auto& move : moves) {
      for (const auto& [target, amp] : ladder_amplitude(move, n)) {
        if (target != n && target < window) edges[static_cast<std::size_t>(n)].push_back(target);
      }
    }
  }

  auto sweep = [&](int start) {
    std::set<int> seen{start};
    std::queue<int> frontier;
    frontier.push(start);
    while (!frontier.empty()) {
      const int n = frontier.front();
      frontier.pop();
      for (int t : edges[static_cast<std::size_t>(n)]) {
        if (seen.insert(t).second) frontier.push(t);
      }
    }
    return seen;
  };

  OrbitReport report;
  report.seed = seed;
  report.trusted = window;
  for (const auto& g : generators) report.generator_names.push_back(g.name);
  report.reachable = sweep(seed);
  std::vector<bool> assigned(static_cast<std::size_t>(window), false);
  for (int n = 0; n < window; ++n) {
    if (assigned[static_cast<std::size_t>(n)]) continue;
    const auto block = sweep(n);
    for (int m : block) assigned[static_cast<std::size_t>(m)] = true;
    report.partition.emplace_back(block.begin(), block.end());
  }
  return report;
}

}  // namespace sga

#endif  // SGA_FOCK_HPP
