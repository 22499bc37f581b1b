#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>

#include <Eigen/Core>

namespace wiser {

using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

/// "p/q", or "n" when the denominator is 1.
std::string to_string(const Rational& r);

/// Accepts "n", "p/q" and plain decimals such as "-0.05"; the result is reduced.
Rational parse_rational(std::string_view text);

/// The exact binary value of a finite double.
Rational exact_value(double x);

/// Decimal with `digits` significant digits, rounded half to even.
std::string to_decimal(const Rational& r, int digits = 12);
std::string to_decimal(double x, int digits = 12);

/// Shortest decimal that reads back as the same double.
std::string shortest(double x);

Integer factorial(std::uint64_t n);

inline std::string scalar_text(const Rational& r) { return to_string(r); }
inline std::string scalar_text(double x) { return shortest(x); }

inline double to_double(const Rational& r) { return r.convert_to<double>(); }
inline double to_double(double x) { return x; }

template <class T>
T ipow(T base, std::uint64_t e) {
  T acc(1);
  while (e) {
    if (e & 1u) acc *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return acc;
}

template <class T>
using Vec = Eigen::Matrix<T, Eigen::Dynamic, 1>;
template <class T>
using Mat = Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic>;

template <class T>
Vec<T> make_vec(std::initializer_list<T> xs) {
  Vec<T> v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (const auto& x : xs) v[i++] = x;
  return v;
}

inline Vec<Rational> rvec(std::initializer_list<std::string_view> xs) {
  Vec<Rational> v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (auto x : xs) v[i++] = parse_rational(x);
  return v;
}

template <class T>
struct scalar_traits;

template <>
struct scalar_traits<Rational> {
  static constexpr bool exact = true;
  static bool is_one(const Rational& s) { return s == 1; }
  static bool is_zero(const Rational& s) { return s == 0; }
};

template <>
struct scalar_traits<double> {
  static constexpr bool exact = false;
  static constexpr double tolerance = 1e-9;
  static bool is_one(double s) { return s > 1.0 - tolerance && s < 1.0 + tolerance; }
  static bool is_zero(double s) { return s == 0.0; }
};

template <class U, class T>
U scalar_cast(const T& x) {
  if constexpr (std::is_same_v<U, T>) {
    return x;
  } else if constexpr (std::is_same_v<U, double>) {
    return to_double(x);
  } else {
    return exact_value(x);
  }
}

template <class U, class T>
Vec<U> vec_cast(const Vec<T>& v) {
  Vec<U> out(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) out[i] = scalar_cast<U>(v[i]);
  return out;
}

}  // namespace wiser
