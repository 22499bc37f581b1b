#pragma once

#include <compare>
#include <string>
#include <variant>

#include "wiser/rational.hpp"

namespace wiser {

enum class Mode { Exact, Float };

/// Runtime dual-mode number. Exact op Exact stays Exact; anything touching a
/// Float, and every transcendental function, yields Float.
class Scalar {
 public:
  Scalar() : v_(Rational(0)) {}
  Scalar(Rational r) : v_(std::move(r)) {}
  Scalar(double x) : v_(x) {}
  Scalar(int n) : v_(Rational(n)) {}
  Scalar(long n) : v_(Rational(n)) {}
  Scalar(long long n) : v_(Rational(n)) {}

  Mode mode() const { return std::holds_alternative<Rational>(v_) ? Mode::Exact : Mode::Float; }
  bool exact() const { return mode() == Mode::Exact; }
  const Rational& rational() const;
  double as_double() const;

  /// "p/q" or "n" in Exact mode; shortest round-trip decimal in Float mode.
  std::string str() const;

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a);
  friend bool operator==(const Scalar& a, const Scalar& b);
  friend std::partial_ordering operator<=>(const Scalar& a, const Scalar& b);

 private:
  std::variant<Rational, double> v_;
};

Scalar scalar_ln(const Scalar& s);
Scalar scalar_exp(const Scalar& s);
/// Integer exponents keep Exact mode; everything else is Float.
Scalar scalar_pow(const Scalar& base, const Scalar& exponent);
Scalar parse_scalar(std::string_view text);

}  // namespace wiser
