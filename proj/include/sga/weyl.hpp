#ifndef SGA_WEYL_HPP
#define SGA_WEYL_HPP

#include "sga/field.hpp"

#include <algorithm>
#include <compare>
#include <map>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sga {

enum class Parity { even = 0, odd = 1 };

inline Parity operator+(Parity x, Parity y) {
  return static_cast<Parity>((static_cast<int>(x) + static_cast<int>(y)) % 2);
}
inline bool is_odd(Parity p) { return p == Parity::odd; }
inline const char* to_string(Parity p) { return is_odd(p) ? "odd" : "even"; }

/// Normal-ordered word (a^dagger)^creation a^annihilation.
struct LadderMonomial {
  unsigned creation = 0;
  unsigned annihilation = 0;

  unsigned degree() const { return creation + annihilation; }
  Parity parity() const { return static_cast<Parity>(degree() % 2); }
  /// Shift of the Fock index induced by the monomial.
  int offset() const { return static_cast<int>(creation) - static_cast<int>(annihilation); }
  bool is_identity() const { return degree() == 0; }

  /// Ascending by total degree, then by creation exponent.
  friend std::strong_ordering operator<=>(const LadderMonomial& x, const LadderMonomial& y) {
    if (auto c = x.degree() <=> y.degree(); c != 0) return c;
    return x.creation <=> y.creation;
  }
  friend bool operator==(const LadderMonomial&, const LadderMonomial&) = default;

  std::string str() const {
    if (is_identity()) return "1";
    std::string out;
    auto power = [&out](const char* symbol, unsigned e) {
      if (e == 0) return;
      if (!out.empty()) out += ' ';
      out += symbol;
      if (e > 1) out += '^' + std::to_string(e);
    };
    power("ad", creation);
    power("a", annihilation);
    return out;
  }
};

/// Polynomial in a, a^dagger with coefficients in Q(1/sqrt 2), kept in normal order.
///
/// No stored coefficient is ever zero, so equality of term maps is equality of
/// operators.
class WeylPolynomial {
 public:
  using TermMap = std::map<LadderMonomial, Coefficient>;

  WeylPolynomial() = default;
  WeylPolynomial(const Coefficient& c) {  // NOLINT: scalars embed as multiples of the identity
    add_term({0, 0}, c);
  }
  WeylPolynomial(const LadderMonomial& m, const Coefficient& c = Coefficient(1)) { add_term(m, c); }

  static WeylPolynomial identity() { return {LadderMonomial{0, 0}}; }
  static WeylPolynomial annihilation() { return {LadderMonomial{0, 1}}; }
  static WeylPolynomial creation() { return {LadderMonomial{1, 0}}; }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Coefficient coefficient(const LadderMonomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Coefficient() : it->second;
  }

  void add_term(const LadderMonomial& m, const Coefficient& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }

  /// Highest total degree; zero for constants and for the zero polynomial.
  unsigned degree() const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
  }

  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    const Parity p = terms_.begin()->first.parity();
    return std::all_of(terms_.begin(), terms_.end(), [p](const auto& t) { return t.first.parity() == p; });
  }

  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_identity()); }

  WeylPolynomial& operator+=(const WeylPolynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  WeylPolynomial& operator-=(const WeylPolynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  WeylPolynomial& operator*=(const Coefficient& s) {
    if (s.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [m, c] : terms_) c *= s;
    return *this;
  }

  friend WeylPolynomial operator+(WeylPolynomial x, const WeylPolynomial& y) { return x += y; }
  friend WeylPolynomial operator-(WeylPolynomial x, const WeylPolynomial& y) { return x -= y; }
  friend WeylPolynomial operator-(WeylPolynomial x) { return x *= Coefficient(-1); }
  friend WeylPolynomial operator*(const Coefficient& s, WeylPolynomial x) { return x *= s; }
  friend WeylPolynomial operator*(WeylPolynomial x, const Coefficient& s) { return x *= s; }
  friend WeylPolynomial operator*(const WeylPolynomial& x, const WeylPolynomial& y);
  friend bool operator==(const WeylPolynomial&, const WeylPolynomial&) = default;

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      std::string coeff = c.str();
      const bool compound = !c.is_rational() && c.rational_part() != 0;
      if (compound) coeff = "(" + coeff + ")";
      if (!first) {
        if (!compound && coeff.front() == '-') {
          out += " - ";
          coeff.erase(0, 1);
        } else {
          out += " + ";
        }
      }
      first = false;
      if (m.is_identity()) {
        out += coeff;
      } else if (coeff == "1") {
        out += m.str();
      } else if (coeff == "-1") {
        out += "-" + m.str();
      } else {
        out += coeff + "*" + m.str();
      }
    }
    return out;
  }

  friend std::ostream& operator<<(std::ostream& os, const WeylPolynomial& p) { return os << p.str(); }

 private:
  TermMap terms_;
};

namespace detail {

inline Integer binomial(unsigned n, unsigned k) {
  Integer r = 1;
  for (unsigned i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

inline Integer factorial(unsigned n) {
  Integer r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

}  // namespace detail

/// Product of two normal-ordered monomials, itself normal ordered.
///
/// Moving a^q past (a^dagger)^r with [a, a^dagger] = 1 contracts k pairs in
/// C(q,k) C(r,k) k! ways.
inline WeylPolynomial multiply(const LadderMonomial& x, const LadderMonomial& y) {
  WeylPolynomial out;
  const unsigned contractions = std::min(x.annihilation, y.creation);
  for (unsigned k = 0; k <= contractions; ++k) {
    const Integer weight =
        detail::binomial(x.annihilation, k) * detail::binomial(y.creation, k) * detail::factorial(k);
    out.add_term({x.creation + y.creation - k, x.annihilation + y.annihilation - k}, Coefficient(Rational(weight)));
  }
  return out;
}

inline WeylPolynomial operator*(const WeylPolynomial& x, const WeylPolynomial& y) {
  WeylPolynomial out;
  for (const auto& [mx, cx] : x.terms_) {
    for (const auto& [my, cy] : y.terms_) {
      const Coefficient c = cx * cy;
      for (const auto& [m, w] : multiply(mx, my).terms_) out.add_term(m, c * w);
    }
  }
  return out;
}

inline WeylPolynomial multiply(const WeylPolynomial& x, const WeylPolynomial& y) { return x * y; }

/// Formal dagger. Coefficients are real, so only the words are reversed.
inline WeylPolynomial adjoint(const WeylPolynomial& x) {
  WeylPolynomial out;
  for (const auto& [m, c] : x.terms()) out.add_term({m.annihilation, m.creation}, c);
  return out;
}

inline WeylPolynomial commutator(const WeylPolynomial& x, const WeylPolynomial& y) { return x * y - y * x; }
inline WeylPolynomial anticommutator(const WeylPolynomial& x, const WeylPolynomial& y) { return x * y + y * x; }

/// A parity-homogeneous polynomial. The zero polynomial is homogeneous of either parity.
class GradedElement {
 public:
  explicit GradedElement(WeylPolynomial poly) : poly_(std::move(poly)) {
    if (!poly_.is_homogeneous()) throw std::invalid_argument("mixed-parity polynomial: " + poly_.str());
    if (!poly_.is_zero()) parity_ = poly_.terms().begin()->first.parity();
  }
  GradedElement(WeylPolynomial poly, Parity parity) : GradedElement(std::move(poly)) {
    if (!poly_.is_zero() && parity_ != parity) throw std::invalid_argument("declared parity does not match polynomial");
    parity_ = parity;
  }

  const WeylPolynomial& poly() const { return poly_; }
  Parity parity() const { return parity_; }
  bool is_odd() const { return sga::is_odd(parity_); }

  friend bool operator==(const GradedElement&, const GradedElement&) = default;

 private:
  WeylPolynomial poly_;
  Parity parity_ = Parity::even;
};

/// Sign (-1)^{|x||y|}.
inline int grading_sign(Parity x, Parity y) { return is_odd(x) && is_odd(y) ? -1 : 1; }

/// xy - (-1)^{|x||y|} yx: the anticommutator for two odd entries, the commutator otherwise.
inline GradedElement graded_bracket(const GradedElement& x, const GradedElement& y) {
  const WeylPolynomial value = grading_sign(x.parity(), y.parity()) < 0 ? anticommutator(x.poly(), y.poly())
                                                                          : commutator(x.poly(), y.poly());
  return GradedElement(value, x.parity() + y.parity());
}

struct NamedElement {
  std::string name;
  GradedElement element;

  const WeylPolynomial& poly() const { return element.poly(); }
  friend bool operator==(const NamedElement&, const NamedElement&) = default;
};

namespace generators {

inline WeylPolynomial raising() { return Coefficient(make_rational(1, 2)) * WeylPolynomial(LadderMonomial{2, 0}); }
inline WeylPolynomial lowering() { return Coefficient(make_rational(1, 2)) * WeylPolynomial(LadderMonomial{0, 2}); }
/// K3 = 1/2 ad a + 1/4, half the Hamiltonian in units of hbar*omega.
inline WeylPolynomial weight() {
  return Coefficient(make_rational(1, 2)) * WeylPolynomial(LadderMonomial{1, 1}) + Coefficient(make_rational(1, 4));
}
inline WeylPolynomial odd_lowering() { return Coefficient::inv_sqrt2() * WeylPolynomial::annihilation(); }
inline WeylPolynomial odd_raising() { return Coefficient::inv_sqrt2() * WeylPolynomial::creation(); }
/// H = 2 K3 with hbar*omega = 1.
inline WeylPolynomial hamiltonian() { return Coefficient(2) * weight(); }

}  // namespace generators

/// K+, K-, K3, Q, Qdag in that order.
inline std::vector<NamedElement> standard_generators() {
  return {
      {"K+", GradedElement(generators::raising())},
      {"K-", GradedElement(generators::lowering())},
      {"K3", GradedElement(generators::weight())},
      {"Q", GradedElement(generators::odd_lowering())},
      {"Qdag", GradedElement(generators::odd_raising())},
  };
}

/// Looks up a standard generator, the identity "1", or the bare ladder operators "a"/"ad".
inline NamedElement named_element(const std::string& name) {
  for (auto& g : standard_generators()) {
    if (g.name == name) return g;
  }
  if (name == "1") return {"1", GradedElement(WeylPolynomial::identity())};
  if (name == "a") return {"a", GradedElement(WeylPolynomial::annihilation())};
  if (name == "ad") return {"ad", GradedElement(WeylPolynomial::creation())};
  throw std::invalid_argument("unknown operator name: " + name);
}

/// K^2 = 1/2 (K+ K- + K- K+) - K3^2, evaluated symbolically.
inline WeylPolynomial casimir() {
  using namespace generators;
  const Coefficient half(make_rational(1, 2));
  return half * (raising() * lowering() + lowering() * raising()) - weight() * weight();
}

}  // namespace sga

#endif  // SGA_WEYL_HPP
