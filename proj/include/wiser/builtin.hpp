#pragma once

#include "wiser/channel.hpp"
#include "wiser/distribution.hpp"
#include "wiser/evidence.hpp"

namespace wiser {

/// Disease prior 1/20|d> + 19/20|~d> with a test of sensitivity 9/10 and
/// specificity 3/5.
struct Medical {
  SampleSpace disease;
  SampleSpace test;
  Dist<Rational> prior;
  Channel<Rational> channel;
  Factor<Rational> pt;
  Factor<Rational> nt;
  /// i|pt> + j|nt>
  Evidence<Rational> evidence(std::uint64_t i, std::uint64_t j) const;
  /// i|p> + j|n> on the test outcomes.
  Multiset outcomes(std::uint64_t i, std::uint64_t j) const;
};

const Medical& medical();

}  // namespace wiser
