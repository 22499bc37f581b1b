#pragma once

#include <algorithm>
#include <cmath>

#include "wiser/distribution.hpp"

namespace wiser {

template <class T>
class Channel;

/// D_KL(s, r) = sum_x s(x) ln(s(x)/r(x)) in nats, with 0 ln 0 = 0. Support
/// inclusion is checked on the given weights before any conversion.
template <class T, class U>
double kl_divergence(const Dist<T>& s, const Dist<U>& r) {
  require_same(s.space(), r.space(), "divergence between different spaces");
  double total = 0.0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s(i) == 0) continue;
    if (r(i) == 0) fail(ErrorKind::SupportViolation, "support includes " + s.space().label(i) + " where the second distribution is 0");
    if constexpr (std::is_same_v<T, U>) {
      total += to_double(s(i)) * std::log(to_double(T(s(i) / r(i))));
    } else {
      total += to_double(s(i)) * std::log(to_double(s(i)) / to_double(r(i)));
    }
  }
  return std::max(total, 0.0);
}

/// s |= D_KL(r, c(-)) = sum_z s(z) D_KL(r, c(z)), over the support of s.
template <class T, class U>
double expected_channel_divergence(const Dist<T>& s, const Dist<U>& r, const Channel<T>& c) {
  require_same(s.space(), c.dom(), "distribution is not on the channel domain");
  double total = 0.0;
  for (std::size_t z = 0; z < s.size(); ++z) {
    if (s(z) == 0) continue;
    total += to_double(s(z)) * kl_divergence(r, c.row(z));
  }
  return total;
}

}  // namespace wiser
