#include "support.hpp"

namespace wiser::test {
namespace {

TEST(Channel, MedicalPushPull) {
  const Medical& m = medical();
  EXPECT_EQ(ket(push(m.channel, m.prior)), "17/40|p> + 23/40|n>");
  EXPECT_EQ(pull(m.channel, point_pred(m.test, "p")).values(), rvec({"9/10", "2/5"}));
  EXPECT_EQ(pull(m.channel, point_pred(m.test, "n")).values(), rvec({"1/10", "3/5"}));
  EXPECT_EQ(pull(m.channel, truth(m.test)), truth(m.disease));
  EXPECT_EQ(push(m.channel, dirac(m.disease, "d")), m.channel("d"));
  EXPECT_EQ(push(identity_channel(m.disease), m.prior), m.prior);
}

TEST(Channel, RowsMustBeDistributions) {
  const SampleSpace ab{"a", "b"};
  Mat<R> bad(2, 2);
  bad << q("1/2"), q("1/3"), R(0), R(1);
  EXPECT_EQ(kind_of([&] { Channel<R>(ab, ab, bad); }), ErrorKind::NotADistribution);
  EXPECT_EQ(kind_of([&] { Channel<R>(ab, {uniform<R>(ab)}); }), ErrorKind::SpaceMismatch);
}

TEST(Channel, TriplePull) {
  const Medical& m = medical();
  EXPECT_EQ(triple_pull(m.channel, m.outcomes(2, 1)), m.evidence(2, 1));
  const Evidence<R> psi(m.test, {{fac(m.test, {"1/3", "1"}), 2}, {point_pred(m.test, "n"), 1}});
  EXPECT_EQ(triple_pull(identity_channel(m.test), psi), psi);
  const Channel<R> c = constant_channel(m.disease, dist(m.test, {"1/4", "3/4"}));
  const Evidence<R> pulled = triple_pull(c, psi);
  for (const auto& f : pulled.factors()) EXPECT_EQ(f(0), f(1));
}

TEST(Channel, TriplePullMergesCollisions) {
  const Medical& m = medical();
  const Channel<R> c = constant_channel(m.disease, dist(m.test, {"1/2", "1/2"}));
  const Evidence<R> pulled = triple_pull(c, m.outcomes(2, 1));
  EXPECT_EQ(pulled.distinct(), 1u);
  EXPECT_EQ(pulled.size(), 3u);
}

TEST(Channel, Dagger) {
  const Medical& m = medical();
  const Channel<R> d = dagger(m.channel, m.prior);
  EXPECT_EQ(ket(d("p")), "9/85|d> + 76/85|~d>");
  EXPECT_EQ(ket(d("n")), "1/115|d> + 114/115|~d>");
  EXPECT_EQ(push(d, flrn(m.outcomes(2, 1))), jeffrey_update(m.prior, m.evidence(2, 1)));
  const SampleSpace ab{"a", "b"};
  EXPECT_EQ(dagger(identity_channel(ab), dist(ab, {"1/3", "2/3"})), identity_channel(ab));
  EXPECT_EQ(kind_of([&] { (void)dagger(identity_channel(ab), dirac(ab, "a")); }), ErrorKind::ZeroValidity);
}

TEST(Channel, MultinomialChannel) {
  const Medical& m = medical();
  const Channel<R> one = multinomial_channel(m.channel, 1);
  EXPECT_EQ(one("d")["1|p>"], q("9/10"));
  EXPECT_EQ(one("~d")["1|n>"], q("3/5"));
  const Multiset phi = m.outcomes(2, 1);
  const Channel<R> mc = multinomial_channel(m.channel, 3);
  EXPECT_EQ(push(mc, m.prior)[phi.ket()], pearl_validity(m.prior, triple_pull(m.channel, phi)));
  EXPECT_EQ(push(mc, m.prior)[phi.ket()], q("1143/4000"));
  const Dist<R> via = bayes_update(m.prior, pull(mc, point_pred(mc.cod(), phi.ket())));
  EXPECT_EQ(pearl_update(m.prior, triple_pull(m.channel, phi)), via);
  EXPECT_EQ(dagger(mc, m.prior)(phi.ket()), via);
}

TEST(Channel, JeffreyValidityAlongIsMultinomial) {
  const Medical& m = medical();
  const Multiset phi = m.outcomes(2, 1);
  EXPECT_EQ(jeffrey_validity(m.prior, triple_pull(m.channel, phi)), multinomial(3, push(m.channel, m.prior))[phi.ket()]);
}

TEST(Channel, PearlValidityAlongDiffersFromPushed) {
  const Medical& m = medical();
  const Evidence<R> psi = point_evidence(m.outcomes(2, 1));
  EXPECT_NE(pearl_validity(m.prior, triple_pull(m.channel, psi)), pearl_validity(push(m.channel, m.prior), psi));
  EXPECT_EQ(jeffrey_validity(m.prior, triple_pull(m.channel, psi)), jeffrey_validity(push(m.channel, m.prior), psi));
}

}  // namespace
}  // namespace wiser::test
