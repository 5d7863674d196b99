#ifndef SGA_FIELD_HPP
#define SGA_FIELD_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <compare>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace sga {

using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

inline Rational make_rational(long long num, long long den = 1) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  return Rational(Integer(num), Integer(den));
}

/// "p/q" with the denominator omitted when it is one.
inline std::string to_string(const Rational& r) { return r.str(); }

inline Rational parse_rational(std::string_view text) {
  try {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(Integer(std::string(text)));
    Integer num(std::string(text.substr(0, slash)));
    Integer den(std::string(text.substr(slash + 1)));
    if (den == 0) throw std::domain_error("zero denominator");
    return Rational(num, den);
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("not a rational: " + std::string(text));
  }
}

/// Element a + b*s of the quadratic field Q(s) with s*s = 1/2, i.e. s = 1/sqrt(2).
///
/// The odd generators carry a factor 1/sqrt(2); every bracket pairs two of
/// them, so all structure constants land back in the rational subfield.
class Coefficient {
 public:
  Coefficient() = default;
  Coefficient(const Rational& rational) : rational_(rational) {}  // NOLINT: implicit by intent
  Coefficient(long long value) : rational_(value) {}              // NOLINT
  Coefficient(Rational rational, Rational scaled) : rational_(std::move(rational)), scaled_(std::move(scaled)) {}

  /// The adjoined root s = 1/sqrt(2).
  static Coefficient inv_sqrt2() { return {Rational(0), Rational(1)}; }

  const Rational& rational_part() const { return rational_; }
  const Rational& scaled_part() const { return scaled_; }

  bool is_zero() const { return rational_ == 0 && scaled_ == 0; }
  bool is_rational() const { return scaled_ == 0; }

  Coefficient& operator+=(const Coefficient& o) {
    rational_ += o.rational_;
    scaled_ += o.scaled_;
    return *this;
  }
  Coefficient& operator-=(const Coefficient& o) {
    rational_ -= o.rational_;
    scaled_ -= o.scaled_;
    return *this;
  }
  Coefficient& operator*=(const Coefficient& o) {
    Rational r = rational_ * o.rational_ + scaled_ * o.scaled_ / 2;
    Rational s = rational_ * o.scaled_ + scaled_ * o.rational_;
    rational_ = std::move(r);
    scaled_ = std::move(s);
    return *this;
  }
  Coefficient& operator/=(const Coefficient& o) { return *this *= o.inverse(); }

  /// (a + b s)^-1 = (a - b s) / (a^2 - b^2/2); the norm vanishes only at zero.
  Coefficient inverse() const {
    const Rational norm = rational_ * rational_ - scaled_ * scaled_ / 2;
    if (norm == 0) throw std::domain_error("division by zero coefficient");
    return {rational_ / norm, -scaled_ / norm};
  }

  friend Coefficient operator+(Coefficient x, const Coefficient& y) { return x += y; }
  friend Coefficient operator-(Coefficient x, const Coefficient& y) { return x -= y; }
  friend Coefficient operator*(Coefficient x, const Coefficient& y) { return x *= y; }
  friend Coefficient operator/(Coefficient x, const Coefficient& y) { return x /= y; }
  friend Coefficient operator-(const Coefficient& x) { return {-x.rational_, -x.scaled_}; }
  friend bool operator==(const Coefficient&, const Coefficient&) = default;

  template <class Real = long double>
  Real value() const {
    return rational_.template convert_to<Real>() + scaled_.template convert_to<Real>() * std::sqrt(Real(0.5));
  }

  /// "p/q", or "p/q + r/t*s" / "r/t*s" when the root part is present ("s" alone for a unit root part).
  std::string str() const {
    if (scaled_ == 0) return to_string(rational_);
    auto root_term = [](const Rational& b) { return b == 1 ? std::string("s") : to_string(b) + "*s"; };
    if (rational_ == 0) return scaled_ == -1 ? "-s" : root_term(scaled_);
    return to_string(rational_) + (scaled_ < 0 ? " - " : " + ") + root_term(abs(scaled_));
  }

  friend std::ostream& operator<<(std::ostream& os, const Coefficient& c) { return os << c.str(); }

 private:
  Rational rational_{0};
  Rational scaled_{0};
};

/// Inverse of Coefficient::str() for the forms it produces.
inline Coefficient parse_coefficient(std::string_view text) {
  auto trim = [](std::string_view v) {
    while (!v.empty() && v.front() == ' ') v.remove_prefix(1);
    while (!v.empty() && v.back() == ' ') v.remove_suffix(1);
    return v;
  };
  text = trim(text);
  if (text.empty() || text.back() != 's') return Coefficient(parse_rational(text));
  std::string body(text.substr(0, text.size() - 1));
  if (body.empty() || body.back() == '-' || body.back() == ' ') {
    body += '1';  // bare "s", "-s" or "p/q + s"
  } else if (body.back() == '*') {
    body.pop_back();
  } else {
    throw std::invalid_argument("not a coefficient: " + std::string(text));
  }
  const std::string_view view(body);
  const auto sep = view.find(" + ") != std::string_view::npos ? view.find(" + ") : view.find(" - ");
  if (sep == std::string_view::npos) {
    return {Rational(0), parse_rational(trim(view))};
  }
  Rational scaled = parse_rational(trim(view.substr(sep + 3)));
  if (view[sep + 1] == '-') scaled = -scaled;
  return {parse_rational(trim(view.substr(0, sep))), scaled};
}

}  // namespace sga

#endif  // SGA_FIELD_HPP
