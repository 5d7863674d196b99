#ifndef SGA_SUPERALGEBRA_HPP
#define SGA_SUPERALGEBRA_HPP

#include "sga/exact_span.hpp"
#include "sga/report.hpp"
#include "sga/weyl.hpp"

#include <algorithm>
#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sga {

enum class BracketMode { graded, commutator_only };
enum class BracketKind { commutator, anticommutator };

inline const char* to_string(BracketMode m) { return m == BracketMode::graded ? "graded" : "commutator-only"; }
inline const char* to_string(BracketKind k) { return k == BracketKind::commutator ? "commutator" : "anticommutator"; }

inline BracketKind bracket_kind(Parity x, Parity y, BracketMode mode = BracketMode::graded) {
  return mode == BracketMode::graded && is_odd(x) && is_odd(y) ? BracketKind::anticommutator : BracketKind::commutator;
}

inline GradedElement bracket(const GradedElement& x, const GradedElement& y, BracketMode mode) {
  if (mode == BracketMode::graded) return graded_bracket(x, y);
  return GradedElement(commutator(x.poly(), y.poly()), x.parity() + y.parity());
}

/// Linearly independent, uniquely named list of graded elements.
class AlgebraBasis {
 public:
  AlgebraBasis() = default;
  explicit AlgebraBasis(const std::vector<NamedElement>& elements) {
    for (const auto& e : elements) add(e);
  }

  /// Throws std::invalid_argument on a duplicate name or a linearly dependent element.
  void add(const NamedElement& e) {
    if (index_of(e.name)) throw std::invalid_argument("duplicate basis name: " + e.name);
    if (!span_.insert(e.poly().terms())) throw std::invalid_argument("linearly dependent basis element: " + e.name);
    elements_.push_back(e);
  }

  std::size_t size() const { return elements_.size(); }
  const NamedElement& operator[](std::size_t i) const { return elements_[i]; }
  const std::vector<NamedElement>& elements() const { return elements_; }
  auto begin() const { return elements_.begin(); }
  auto end() const { return elements_.end(); }

  std::optional<std::size_t> index_of(const std::string& name) const {
    for (std::size_t i = 0; i < elements_.size(); ++i) {
      if (elements_[i].name == name) return i;
    }
    return std::nullopt;
  }

  bool contains(const WeylPolynomial& p) const { return span_.contains(p.terms()); }

  std::optional<std::vector<Coefficient>> coordinates(const WeylPolynomial& p) const {
    return span_.coordinates(p.terms());
  }

  bool spans_subspace_of(const AlgebraBasis& other) const {
    return std::all_of(elements_.begin(), elements_.end(), [&](const NamedElement& e) { return other.contains(e.poly()); });
  }

  std::vector<std::string> names() const {
    std::vector<std::string> out;
    for (const auto& e : elements_) out.push_back(e.name);
    return out;
  }

 private:
  std::vector<NamedElement> elements_;
  ExactSpan<LadderMonomial, Coefficient> span_;
};

inline bool same_span(const AlgebraBasis& x, const AlgebraBasis& y) {
  return x.size() == y.size() && x.spans_subspace_of(y);
}

/// If p is a nonzero multiple of a standard generator or of the identity, that generator.
inline std::optional<NamedElement> canonical_match(const WeylPolynomial& p) {
  if (p.is_zero()) return std::nullopt;
  auto candidates = standard_generators();
  candidates.push_back(named_element("1"));
  for (const auto& g : candidates) {
    const auto& [mono, coeff] = *g.poly().terms().begin();
    const Coefficient scale = p.coefficient(mono) / coeff;
    if (!scale.is_zero() && p == scale * g.poly()) return g;
  }
  return std::nullopt;
}

struct ClosureResult {
  AlgebraBasis basis;
  int generations = 0;  // closure passes that extended the basis
  std::vector<std::string> added;
};

class ClosureBoundExceeded : public std::runtime_error {
 public:
  ClosureBoundExceeded(std::size_t max_dim, AlgebraBasis partial)
      : std::runtime_error("bracket closure exceeded max_dim = " + std::to_string(max_dim)),
        partial_(std::move(partial)) {}
  const AlgebraBasis& partial() const { return partial_; }

 private:
  AlgebraBasis partial_;
};

inline constexpr std::size_t default_max_dim = 16;

/// Brackets all pairs of the current basis, appending every result outside
/// the span, until a pass adds nothing.
///
/// Elements that are multiples of a standard generator (or of the identity)
/// enter under that generator's name and normalization; anything else is
/// appended as computed and named G1, G2, ... in creation order.
inline ClosureResult close_under_bracket(const std::vector<NamedElement>& seed, BracketMode mode,
                                         std::size_t max_dim = default_max_dim) {
  if (max_dim < seed.size()) throw std::invalid_argument("max_dim is smaller than the seed");
  ClosureResult result{AlgebraBasis(seed), 0, {}};
  AlgebraBasis& basis = result.basis;
  int anonymous = 0;

  std::size_t checked = 0;  // pairs with both indices below this were bracketed in an earlier pass
  while (true) {
    const std::size_t current = basis.size();
    bool grew = false;
    for (std::size_t j = checked; j < current; ++j) {
      for (std::size_t i = 0; i <= j; ++i) {
        GradedElement value = bracket(basis[i].element, basis[j].element, mode);
        if (basis.contains(value.poly())) continue;
        if (basis.size() == max_dim) throw ClosureBoundExceeded(max_dim, basis);

        NamedElement fresh{"G" + std::to_string(anonymous + 1), value};
        if (auto match = canonical_match(value.poly()); match && !basis.index_of(match->name)) {
          fresh = *match;
        } else {
          ++anonymous;
        }
        basis.add(fresh);
        result.added.push_back(fresh.name);
        grew = true;
      }
    }
    checked = current;
    if (!grew) break;
    ++result.generations;
  }
  return result;
}

/// c[i][j][k]: coefficient of basis element k in the graded bracket of elements i and j.
struct StructureConstants {
  std::vector<std::string> names;
  std::vector<Parity> parities;
  std::vector<std::vector<std::vector<Coefficient>>> tensor;
  std::vector<std::vector<BracketKind>> kind;

  std::size_t size() const { return names.size(); }

  std::size_t index(const std::string& name) const {
    auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end()) throw std::out_of_range("no basis element named " + name);
    return static_cast<std::size_t>(it - names.begin());
  }

  const Coefficient& operator()(std::size_t i, std::size_t j, std::size_t k) const { return tensor[i][j][k]; }
  Coefficient& operator()(std::size_t i, std::size_t j, std::size_t k) { return tensor[i][j][k]; }
  const Coefficient& at(const std::string& i, const std::string& j, const std::string& k) const {
    return tensor[index(i)][index(j)][index(k)];
  }
  BracketKind kind_of(const std::string& i, const std::string& j) const { return kind[index(i)][index(j)]; }
};

class NotClosed : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline StructureConstants structure_constants(const AlgebraBasis& basis) {
  const std::size_t n = basis.size();
  StructureConstants sc;
  sc.names = basis.names();
  for (const auto& e : basis) sc.parities.push_back(e.element.parity());
  sc.tensor.assign(n, std::vector<std::vector<Coefficient>>(n, std::vector<Coefficient>(n)));
  sc.kind.assign(n, std::vector<BracketKind>(n, BracketKind::commutator));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      sc.kind[i][j] = bracket_kind(sc.parities[i], sc.parities[j]);
      const GradedElement value = graded_bracket(basis[i].element, basis[j].element);
      auto coords = basis.coordinates(value.poly());
      if (!coords) throw NotClosed("bracket of " + sc.names[i] + " and " + sc.names[j] + " leaves the span");
      sc.tensor[i][j] = std::move(*coords);
    }
  }
  return sc;
}

namespace detail {

inline std::string triple_name(const std::vector<std::string>& names, std::size_t i, std::size_t j, std::size_t k) {
  return "jacobi(" + names[i] + "," + names[j] + "," + names[k] + ")";
}

inline std::vector<std::array<std::size_t, 3>> orderings(std::size_t i, std::size_t j, std::size_t k) {
  std::array<std::size_t, 3> t{i, j, k};
  std::vector<std::array<std::size_t, 3>> out;
  do out.push_back(t);
  while (std::next_permutation(t.begin(), t.end()));
  return out;
}

}  // namespace detail

/// Graded Jacobi identity on every unordered triple (with repetition), evaluated
/// on the polynomials themselves:
///   (-1)^{|x||z|} [x,[y,z]] + (-1)^{|y||x|} [y,[z,x]] + (-1)^{|z||y|} [z,[x,y]] = 0
/// for every ordering of the triple.
inline VerificationReport graded_jacobi_check(const AlgebraBasis& basis) {
  VerificationReport report;
  const auto names = basis.names();
  const std::size_t n = basis.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      for (std::size_t k = j; k < n; ++k) {
        WeylPolynomial worst;
        for (const auto& [a, b, c] : detail::orderings(i, j, k)) {
          const auto& x = basis[a].element;
          const auto& y = basis[b].element;
          const auto& z = basis[c].element;
          WeylPolynomial sum = Coefficient(grading_sign(x.parity(), z.parity())) *
                               graded_bracket(x, graded_bracket(y, z)).poly();
          sum += Coefficient(grading_sign(y.parity(), x.parity())) * graded_bracket(y, graded_bracket(z, x)).poly();
          sum += Coefficient(grading_sign(z.parity(), y.parity())) * graded_bracket(z, graded_bracket(x, y)).poly();
          if (!sum.is_zero()) worst = sum;
        }
        Check check{detail::triple_name(names, i, j, k), "graded Jacobi identity", CheckMode::symbolic,
                    worst.is_zero() ? CheckStatus::pass : CheckStatus::fail, std::nullopt,
                    worst.is_zero() ? "" : worst.str(), ""};
        report.checks.push_back(std::move(check));
      }
    }
  }
  return report;
}

/// Same identity, evaluated on the structure-constant tensor alone.
inline VerificationReport graded_jacobi_check(const StructureConstants& sc) {
  const std::size_t n = sc.size();
  using Row = std::vector<Coefficient>;
  // [x, sum_k v_k e_k] in basis coordinates.
  auto bracket_with = [&](std::size_t x, const Row& v) {
    Row out(n);
    for (std::size_t k = 0; k < n; ++k) {
      if (v[k].is_zero()) continue;
      for (std::size_t l = 0; l < n; ++l) out[l] += v[k] * sc(x, k, l);
    }
    return out;
  };
  VerificationReport report;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      for (std::size_t k = j; k < n; ++k) {
        std::string residual;
        for (const auto& [a, b, c] : detail::orderings(i, j, k)) {
          const Parity pa = sc.parities[a], pb = sc.parities[b], pc = sc.parities[c];
          Row sum(n);
          const std::array<std::pair<Row, int>, 3> terms{{
              {bracket_with(a, sc.tensor[b][c]), grading_sign(pa, pc)},
              {bracket_with(b, sc.tensor[c][a]), grading_sign(pb, pa)},
              {bracket_with(c, sc.tensor[a][b]), grading_sign(pc, pb)},
          }};
          for (const auto& [row, sign] : terms) {
            for (std::size_t l = 0; l < n; ++l) sum[l] += Coefficient(sign) * row[l];
          }
          for (std::size_t l = 0; l < n; ++l) {
            if (sum[l].is_zero()) continue;
            if (!residual.empty()) residual += ", ";
            residual += sc.names[l] + ": " + sum[l].str();
          }
          if (!residual.empty()) break;
        }
        Check check{detail::triple_name(sc.names, i, j, k), "graded Jacobi identity", CheckMode::symbolic,
                    residual.empty() ? CheckStatus::pass : CheckStatus::fail, std::nullopt, residual, ""};
        report.checks.push_back(std::move(check));
      }
    }
  }
  return report;
}

}  // namespace sga

#endif  // SGA_SUPERALGEBRA_HPP
