#include "wiser/builtin.hpp"

namespace wiser {

namespace {

Medical build() {
  SampleSpace disease{"d", "~d"};
  SampleSpace test{"p", "n"};
  Dist<Rational> prior(disease, rvec({"1/20", "19/20"}));
  Channel<Rational> channel(disease, {Dist<Rational>(test, rvec({"9/10", "1/10"})),
                                      Dist<Rational>(test, rvec({"2/5", "3/5"}))});
  Factor<Rational> pt = pull(channel, point_pred(test, "p"));
  Factor<Rational> nt = pull(channel, point_pred(test, "n"));
  return Medical{disease, test, prior, channel, pt, nt};
}

}  // namespace

Evidence<Rational> Medical::evidence(std::uint64_t i, std::uint64_t j) const {
  return Evidence<Rational>(disease, {{pt, i}, {nt, j}});
}

Multiset Medical::outcomes(std::uint64_t i, std::uint64_t j) const { return Multiset(test, {i, j}); }

const Medical& medical() {
  static const Medical m = build();
  return m;
}

}  // namespace wiser
