#include "wiser/scalar.hpp"

#include <cmath>

#include "wiser/error.hpp"

namespace wiser {

const Rational& Scalar::rational() const {
  if (auto* r = std::get_if<Rational>(&v_)) return *r;
  fail(ErrorKind::SpaceMismatch, "scalar is not exact");
}

double Scalar::as_double() const {
  if (auto* r = std::get_if<Rational>(&v_)) return to_double(*r);
  return std::get<double>(v_);
}

std::string Scalar::str() const {
  if (auto* r = std::get_if<Rational>(&v_)) return to_string(*r);
  return shortest(std::get<double>(v_));
}

namespace {

template <class Op>
Scalar combine(const Scalar& a, const Scalar& b, Op op) {
  if (a.exact() && b.exact()) return Scalar(op(a.rational(), b.rational()));
  return Scalar(op(a.as_double(), b.as_double()));
}

}  // namespace

Scalar operator+(const Scalar& a, const Scalar& b) {
  return combine(a, b, [](const auto& x, const auto& y) { return x + y; });
}
Scalar operator-(const Scalar& a, const Scalar& b) {
  return combine(a, b, [](const auto& x, const auto& y) { return x - y; });
}
Scalar operator*(const Scalar& a, const Scalar& b) {
  return combine(a, b, [](const auto& x, const auto& y) { return x * y; });
}
Scalar operator/(const Scalar& a, const Scalar& b) {
  if (b.exact() && b.rational() == 0) fail(ErrorKind::ZeroValidity, "division by exact zero");
  return combine(a, b, [](const auto& x, const auto& y) { return x / y; });
}
Scalar operator-(const Scalar& a) {
  if (a.exact()) return Scalar(Rational(-a.rational()));
  return Scalar(-a.as_double());
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.exact() && b.exact()) return a.rational() == b.rational();
  return a.as_double() == b.as_double();
}

std::partial_ordering operator<=>(const Scalar& a, const Scalar& b) {
  if (a.exact() && b.exact()) {
    if (a.rational() < b.rational()) return std::partial_ordering::less;
    if (a.rational() > b.rational()) return std::partial_ordering::greater;
    return std::partial_ordering::equivalent;
  }
  return a.as_double() <=> b.as_double();
}

Scalar scalar_ln(const Scalar& s) {
  if (s.exact() ? s.rational() <= 0 : !(s.as_double() > 0.0))
    fail(ErrorKind::NonPositiveLog, "ln of " + s.str());
  return Scalar(std::log(s.as_double()));
}

Scalar scalar_exp(const Scalar& s) { return Scalar(std::exp(s.as_double())); }

Scalar scalar_pow(const Scalar& base, const Scalar& exponent) {
  if (base.exact() && exponent.exact() &&
      boost::multiprecision::denominator(exponent.rational()) == 1) {
    const Integer n = boost::multiprecision::numerator(exponent.rational());
    const auto k = static_cast<std::uint64_t>(boost::multiprecision::abs(n));
    Rational p = ipow(base.rational(), k);
    if (n < 0) {
      if (p == 0) fail(ErrorKind::ZeroValidity, "negative power of zero");
      p = 1 / p;
    }
    return Scalar(p);
  }
  return Scalar(std::pow(base.as_double(), exponent.as_double()));
}

Scalar parse_scalar(std::string_view text) { return Scalar(parse_rational(text)); }

}  // namespace wiser
