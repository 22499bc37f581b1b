#pragma once

#include <gtest/gtest.h>

#include "wiser/builtin.hpp"
#include "wiser/wiser.hpp"

namespace wiser::test {

using R = Rational;

inline R q(std::string_view s) { return parse_rational(s); }

inline Dist<R> dist(const SampleSpace& s, std::initializer_list<std::string_view> w) { return Dist<R>(s, rvec(w)); }
inline Factor<R> fac(const SampleSpace& s, std::initializer_list<std::string_view> v) { return Factor<R>(s, rvec(v)); }

template <class F>
ErrorKind kind_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorKind::IOFailure;
}

}  // namespace wiser::test
