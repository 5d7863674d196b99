#ifndef SGA_EXACT_AMPLITUDE_HPP
#define SGA_EXACT_AMPLITUDE_HPP

#include "sga/field.hpp"

#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>

namespace sga {

/// Exact value sum_i c_i sqrt(k_i) with rational c_i and distinct square-free k_i.
///
/// Square roots of distinct square-free integers are linearly independent over
/// the rationals, so the value is zero iff no terms are stored.
class ExactAmplitude {
 public:
  using Radicand = std::uint64_t;
  using TermMap = std::map<Radicand, Rational>;

  ExactAmplitude() = default;
  ExactAmplitude(const Rational& c) { add(1, c); }  // NOLINT: rationals embed

  /// c * sqrt(f_1 * f_2 * ... * f_n), reduced to square-free form.
  static ExactAmplitude sqrt_of_product(std::span<const Radicand> factors, const Rational& c = Rational(1)) {
    std::map<Radicand, unsigned> exponents;
    for (Radicand f : factors) {
      if (f == 0) return {};
      for (Radicand p = 2; p * p <= f; ++p) {
        while (f % p == 0) {
          ++exponents[p];
          f /= p;
        }
      }
      if (f > 1) ++exponents[f];
    }
    Integer outside = 1;
    Radicand inside = 1;
    for (const auto& [p, e] : exponents) {
      for (unsigned i = 0; i < e / 2; ++i) outside *= p;
      if (e % 2 == 1) inside = checked_multiply(inside, p);
    }
    ExactAmplitude out;
    out.add(inside, c * Rational(outside));
    return out;
  }

  static ExactAmplitude sqrt_of(Radicand k, const Rational& c = Rational(1)) {
    const Radicand f[] = {k};
    return sqrt_of_product(f, c);
  }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 1); }
  Rational rational_part() const {
    auto it = terms_.find(1);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  ExactAmplitude& operator+=(const ExactAmplitude& o) {
    for (const auto& [k, c] : o.terms_) add(k, c);
    return *this;
  }
  ExactAmplitude& operator*=(const Rational& s) {
    if (s == 0) terms_.clear();
    for (auto& [k, c] : terms_) c *= s;
    return *this;
  }

  friend ExactAmplitude operator+(ExactAmplitude x, const ExactAmplitude& y) { return x += y; }
  friend ExactAmplitude operator*(ExactAmplitude x, const Rational& s) { return x *= s; }

  /// sqrt(k1) sqrt(k2) = g sqrt((k1/g)(k2/g)) with g = gcd(k1, k2), for square-free k1, k2.
  friend ExactAmplitude operator*(const ExactAmplitude& x, const ExactAmplitude& y) {
    ExactAmplitude out;
    for (const auto& [k1, c1] : x.terms_) {
      for (const auto& [k2, c2] : y.terms_) {
        const Radicand g = std::gcd(k1, k2);
        out.add(checked_multiply(k1 / g, k2 / g), c1 * c2 * Rational(g));
      }
    }
    return out;
  }

  friend bool operator==(const ExactAmplitude&, const ExactAmplitude&) = default;

  template <class Real = long double>
  Real value() const {
    Real v = 0;
    for (const auto& [k, c] : terms_) v += c.template convert_to<Real>() * std::sqrt(static_cast<Real>(k));
    return v;
  }

  /// "1/2*sqrt(2) + 3", or "0".
  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [k, c] : terms_) {
      if (!out.empty()) out += " + ";
      if (k == 1) {
        out += to_string(c);
      } else if (c == 1) {
        out += "sqrt(" + std::to_string(k) + ")";
      } else {
        out += to_string(c) + "*sqrt(" + std::to_string(k) + ")";
      }
    }
    return out;
  }

 private:
  static Radicand checked_multiply(Radicand x, Radicand y) {
    Radicand r = 0;
    if (__builtin_mul_overflow(x, y, &r)) throw std::overflow_error("square-free radicand overflows 64 bits");
    return r;
  }

  void add(Radicand k, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (inserted) return;
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }

  TermMap terms_;
};

}  // namespace sga

#endif  // SGA_EXACT_AMPLITUDE_HPP
