#include "wiser/rational.hpp"

#include <charconv>
#include <cmath>
#include <system_error>

#include "wiser/error.hpp"

namespace wiser {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::UnknownElement: return "UnknownElement";
    case ErrorKind::DuplicateElement: return "DuplicateElement";
    case ErrorKind::SpaceMismatch: return "SpaceMismatch";
    case ErrorKind::SizeLimit: return "SizeLimit";
    case ErrorKind::NotADistribution: return "NotADistribution";
    case ErrorKind::NegativeValue: return "NegativeValue";
    case ErrorKind::NotAPredicate: return "NotAPredicate";
    case ErrorKind::WeightsNotConvex: return "WeightsNotConvex";
    case ErrorKind::EmptyMultiset: return "EmptyMultiset";
    case ErrorKind::EmptyEvidence: return "EmptyEvidence";
    case ErrorKind::ZeroValidity: return "ZeroValidity";
    case ErrorKind::NonPositiveLog: return "NonPositiveLog";
    case ErrorKind::SupportViolation: return "SupportViolation";
    case ErrorKind::SupportMismatch: return "SupportMismatch";
    case ErrorKind::UnknownSuite: return "UnknownSuite";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::IOFailure: return "IOFailure";
  }
  return "Error";
}

std::string to_string(const Rational& r) {
  const Integer num = boost::multiprecision::numerator(r);
  const Integer den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

Integer decimal_integer(std::string_view digits) {
  const auto nz = digits.find_first_not_of('0');
  return nz == std::string_view::npos ? Integer(0) : Integer(std::string(digits.substr(nz)));
}

Integer parse_integer(std::string_view s, std::string_view whole) {
  bool neg = false;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
    neg = s[0] == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) throw ParseError(1, 1, "not a rational number: \"" + std::string(whole) + "\"");
  Integer v = decimal_integer(s);
  return neg ? Integer(-v) : v;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    Integer p = parse_integer(text.substr(0, slash), text);
    std::string_view d = text.substr(slash + 1);
    if (!all_digits(d)) throw ParseError(1, 1, "bad denominator in \"" + std::string(text) + "\"");
    Integer q = decimal_integer(d);
    if (q == 0) throw ParseError(1, 1, "zero denominator in \"" + std::string(text) + "\"");
    return Rational(p, q);
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view ip = text.substr(0, dot);
    std::string_view fp = text.substr(dot + 1);
    bool neg = !ip.empty() && ip[0] == '-';
    if (!ip.empty() && (ip[0] == '-' || ip[0] == '+')) ip.remove_prefix(1);
    if ((!ip.empty() && !all_digits(ip)) || (!fp.empty() && !all_digits(fp)) || (ip.empty() && fp.empty()))
      throw ParseError(1, 1, "not a rational number: \"" + std::string(text) + "\"");
    Integer whole = decimal_integer(ip);
    Integer frac = decimal_integer(fp);
    Integer scale = boost::multiprecision::pow(Integer(10), static_cast<unsigned>(fp.size()));
    Rational r(whole * scale + frac, scale);
    return neg ? Rational(-r) : r;
  }
  return Rational(parse_integer(text, text));
}

Rational exact_value(double x) {
  if (!std::isfinite(x)) fail(ErrorKind::NotADistribution, "non-finite value");
  int exp = 0;
  double m = std::frexp(x, &exp);
  // 53-bit mantissa scaled to an integer.
  auto mant = static_cast<long long>(std::ldexp(m, 53));
  exp -= 53;
  Rational r{Integer(mant)};
  if (exp > 0) r *= Rational(boost::multiprecision::pow(Integer(2), static_cast<unsigned>(exp)));
  if (exp < 0) r /= Rational(boost::multiprecision::pow(Integer(2), static_cast<unsigned>(-exp)));
  return r;
}

std::string to_decimal(const Rational& r, int digits) {
  if (r == 0) return "0";
  const bool neg = r < 0;
  Rational a = neg ? Rational(-r) : r;

  // e = floor(log10(a)), found by exact comparison against powers of ten.
  int e = static_cast<int>(std::floor(std::log10(to_double(a))));
  auto pow10 = [](int k) {
    Rational t = ipow(Rational(10), static_cast<std::uint64_t>(k < 0 ? -k : k));
    return k < 0 ? Rational(1 / t) : t;
  };
  while (pow10(e) > a) --e;
  while (pow10(e + 1) <= a) ++e;

  const int shift = digits - 1 - e;
  Rational scaled = a * pow10(shift);
  Integer n = boost::multiprecision::numerator(scaled) / boost::multiprecision::denominator(scaled);
  Rational rem = scaled - Rational(n);
  const Rational half(1, 2);
  if (rem > half || (rem == half && (n % 2) != 0)) n += 1;

  std::string s = n.str();
  int point = e + 1;  // digits before the decimal point
  if (static_cast<int>(s.size()) > digits) {
    // Rounding carried into a new leading digit.
    s.pop_back();
    ++point;
  }
  std::string out;
  if (point <= 0) {
    out = "0." + std::string(static_cast<std::size_t>(-point), '0') + s;
  } else if (point >= static_cast<int>(s.size())) {
    out = s + std::string(static_cast<std::size_t>(point) - s.size(), '0');
  } else {
    out = s.substr(0, static_cast<std::size_t>(point)) + "." + s.substr(static_cast<std::size_t>(point));
  }
  return neg ? "-" + out : out;
}

std::string to_decimal(double x, int digits) { return to_decimal(exact_value(x), digits); }

std::string shortest(double x) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

Integer factorial(std::uint64_t n) {
  Integer f(1);
  for (std::uint64_t k = 2; k <= n; ++k) f *= k;
  return f;
}

}  // namespace wiser
