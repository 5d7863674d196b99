#ifndef SGA_TESTS_PROPERTY_SUITES_HPP
#define SGA_TESTS_PROPERTY_SUITES_HPP

// Randomized property suites shared by the unit tests and the acceptance binary.
// Each suite draws polynomials of degree <= 4 and truncations N <= 32 from a
// fixed-seed generator and reports how many cases failed.

#include "oracles.hpp"
#include "sga/fock.hpp"
#include "sga/superalgebra.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>

namespace properties {

using namespace sga;

inline constexpr int default_cases = 1000;
inline constexpr unsigned max_degree = 4;
inline constexpr int max_dim = 32;
inline constexpr long double entry_tol = 1e-12L;  // relative, per matrix entry

struct Outcome {
  int cases = 0;
  int failures = 0;
  std::string first_failure;

  bool passed() const { return failures == 0; }
  void record(bool ok, const std::string& what) {
    ++cases;
    if (ok) return;
    if (failures++ == 0) first_failure = what;
  }
};

namespace detail {

inline Parity random_parity(std::mt19937_64& rng) { return rng() % 2 ? Parity::odd : Parity::even; }
inline int random_dim(std::mt19937_64& rng) { return std::uniform_int_distribution<int>(1, max_dim)(rng); }

}  // namespace detail

/// Random rewrite orders of x*y (twice, independently) agree with the closed-form product.
inline Outcome confluence(int cases = default_cases, std::uint64_t seed = 0x5eed0001) {
  std::mt19937_64 rng(seed);
  Outcome out;
  for (int i = 0; i < cases; ++i) {
    const auto x = oracle::random_polynomial(rng, max_degree);
    const auto y = oracle::random_polynomial(rng, max_degree);
    const WeylPolynomial wick = x * y;
    const bool ok = oracle::product_by_rewriting(x, y, rng) == wick && oracle::product_by_rewriting(x, y, rng) == wick;
    out.record(ok, "x = " + x.str() + ", y = " + y.str());
  }
  return out;
}

/// Associativity, two-sided distributivity and the unit.
inline Outcome ring_axioms(int cases = default_cases, std::uint64_t seed = 0x5eed0002) {
  std::mt19937_64 rng(seed);
  const WeylPolynomial one = WeylPolynomial::identity();
  Outcome out;
  for (int i = 0; i < cases; ++i) {
    const auto x = oracle::random_polynomial(rng, max_degree, true, 3);
    const auto y = oracle::random_polynomial(rng, max_degree, true, 3);
    const auto z = oracle::random_polynomial(rng, max_degree, true, 3);
    const bool ok = (x * y) * z == x * (y * z) && x * (y + z) == x * y + x * z && (x + y) * z == x * z + y * z &&
                    x * one == x && one * x == x;
    out.record(ok, "x = " + x.str() + ", y = " + y.str() + ", z = " + z.str());
  }
  return out;
}

/// [x,y] = -(-1)^{|x||y|} [y,x] on parity-homogeneous x, y, with the bracket's parity |x| + |y|.
inline Outcome graded_antisymmetry(int cases = default_cases, std::uint64_t seed = 0x5eed0003) {
  std::mt19937_64 rng(seed);
  Outcome out;
  for (int i = 0; i < cases; ++i) {
    const GradedElement x(oracle::random_homogeneous(rng, max_degree, detail::random_parity(rng)));
    const GradedElement y(oracle::random_homogeneous(rng, max_degree, detail::random_parity(rng)));
    const Coefficient sign(-grading_sign(x.parity(), y.parity()));
    const GradedElement xy = graded_bracket(x, y);
    const bool ok = xy.poly() == sign * graded_bracket(y, x).poly() && xy.parity() == x.parity() + y.parity();
    out.record(ok, "x = " + x.poly().str() + ", y = " + y.poly().str());
  }
  return out;
}

/// adjoint(adjoint x) = x, adjoint(xy) = adjoint(y) adjoint(x), and to_matrix(adjoint x) is the transpose.
inline Outcome adjoint_transpose(int cases = default_cases, std::uint64_t seed = 0x5eed0004) {
  std::mt19937_64 rng(seed);
  Outcome out;
  for (int i = 0; i < cases; ++i) {
    const auto x = oracle::random_polynomial(rng, max_degree);
    const auto y = oracle::random_polynomial(rng, max_degree);
    const int dim = detail::random_dim(rng);
    const RealMatrix m = to_matrix(x, dim).entries;
    const RealMatrix mt = to_matrix(adjoint(x), dim).entries;
    const bool ok = adjoint(adjoint(x)) == x && adjoint(x * y) == adjoint(y) * adjoint(x) &&
                    (mt - m.transpose()).cwiseAbs().maxCoeff() == 0;
    out.record(ok, "x = " + x.str() + ", y = " + y.str() + ", dim = " + std::to_string(dim));
  }
  return out;
}

/// Every to_matrix entry matches the exact ladder amplitude, and both match
/// letter-by-letter application, to entry_tol relative to the entry size.
inline Outcome matrix_vs_amplitude(int cases = default_cases, std::uint64_t seed = 0x5eed0005) {
  std::mt19937_64 rng(seed);
  Outcome out;
  for (int i = 0; i < cases; ++i) {
    const auto x = oracle::random_polynomial(rng, max_degree);
    const int dim = detail::random_dim(rng);
    const auto m = to_matrix(x, dim);
    RealMatrix exact = RealMatrix::Zero(dim, dim);
    for (int n = 0; n < dim; ++n) {
      for (const auto& [target, amp] : ladder_amplitude(x, n)) {
        if (target < dim) exact(target, n) = amp.value();
      }
    }
    long double worst = 0;
    for (int r = 0; r < dim; ++r) {
      for (int c = 0; c < dim; ++c) {
        const long double scale = 1 + std::abs(exact(r, c));
        worst = std::max(worst, std::abs(m(r, c) - exact(r, c)) / scale);
        worst = std::max(worst, std::abs(oracle::matrix_element(x, r, c) - exact(r, c)) / scale);
      }
    }
    out.record(worst <= entry_tol, "x = " + x.str() + ", dim = " + std::to_string(dim));
  }
  return out;
}

}  // namespace properties

#endif  // SGA_TESTS_PROPERTY_SUITES_HPP
