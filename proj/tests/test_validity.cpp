#include "support.hpp"

namespace wiser::test {
namespace {

TEST(Validity, Medical) {
  const Medical& m = medical();
  EXPECT_EQ(validity(m.prior, m.pt), q("17/40"));
  EXPECT_EQ(validity(m.prior, m.nt), q("23/40"));
  EXPECT_EQ(validity(m.prior, truth(m.disease)), 1);
  EXPECT_EQ(validity(m.prior, point_pred(m.disease, "d")), q("1/20"));
}

TEST(Validity, JeffreyAndPearlMedical) {
  const Medical& m = medical();
  const Evidence<R> psi = m.evidence(2, 1);
  EXPECT_EQ(jeffrey_validity(m.prior, psi), q("19941/64000"));
  EXPECT_NEAR(to_double(jeffrey_validity(m.prior, psi)), 0.3116, 5e-5);
  EXPECT_EQ(pearl_validity(m.prior, psi), q("1143/4000"));
  EXPECT_EQ(jeffrey_validity(m.prior, Evidence<R>(m.disease, {{truth(m.disease), 1}})), 1);
}

TEST(Validity, FirstDivergenceExample) {
  const SampleSpace s{"x", "y", "z"};
  const Dist<R> w = dist(s, {"0.3", "0.3", "0.4"});
  const Factor<R> p = fac(s, {"0.01", "0.01", "0.98"});
  const Evidence<R> psi(s, {{p, 1}, {ortho(p), 1}});
  EXPECT_EQ(jeffrey_validity(w, psi), q("0.479192"));
  EXPECT_EQ(pearl_validity(w, psi), q("0.02756"));
  EXPECT_NEAR(to_double(jeffrey_validity(w, psi)), 0.479, 5e-4);
  EXPECT_NEAR(to_double(pearl_validity(w, psi)), 0.028, 5e-4);
}

TEST(Validity, SecondDivergenceExampleNeedsOtherPrior) {
  const SampleSpace s{"x", "y", "z"};
  const Factor<R> qf = fac(s, {"0.3", "0.2", "0.9"});
  const Evidence<R> chi(s, {{qf, 1}, {ortho(qf), 4}});
  const Dist<R> printed_prior = dist(s, {"0.3", "0.3", "0.4"});
  EXPECT_GT(std::abs(to_double(jeffrey_validity(printed_prior, chi)) - 0.054), 5e-4);
  const Dist<R> w = dist(s, {"0.2", "0.2", "0.6"});
  EXPECT_EQ(jeffrey_validity(w, chi), q("0.053747712"));
  EXPECT_EQ(pearl_validity(w, chi), q("0.15422"));
  EXPECT_LT(jeffrey_validity(w, chi), pearl_validity(w, chi));
}

TEST(Validity, RepeatedFactorPearlDominates) {
  const Medical& m = medical();
  for (std::uint64_t n = 1; n <= 6; ++n) {
    const Evidence<R> psi(m.disease, {{m.pt, n}});
    EXPECT_LE(jeffrey_validity(m.prior, psi), pearl_validity(m.prior, psi));
  }
}

TEST(Validity, IteratedPearl) {
  const Medical& m = medical();
  EXPECT_EQ(iterated_pearl_validity(m.prior, {m.pt, m.pt, m.nt}), q("381/4000"));
  EXPECT_EQ(iterated_pearl_validity(m.prior, {m.pt, m.nt, m.pt}), q("381/4000"));
  EXPECT_EQ(iterated_pearl_validity(m.prior, {m.nt, m.pt, m.pt}), q("381/4000"));
  EXPECT_EQ(iterated_pearl_validity(m.prior, {m.pt}), q("17/40"));
  // with a repeated factor the divisor is coefm = 3, not 3! = 6
  EXPECT_EQ(q("381/4000"), pearl_validity(m.prior, m.evidence(2, 1)) / 3);
  EXPECT_NE(q("381/4000"), pearl_validity(m.prior, m.evidence(2, 1)) / 6);
}

TEST(Validity, IteratedPearlNamesFailingPrefix) {
  const SampleSpace ab{"a", "b"};
  try {
    (void)iterated_pearl_validity(uniform(ab), {point_pred(ab, "a"), point_pred(ab, "b")});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ZeroValidity);
    EXPECT_NE(std::string(e.what()).find("factor 2"), std::string::npos);
  }
}

TEST(Validity, Covariance) {
  const Medical& m = medical();
  EXPECT_EQ(covariance(m.prior, m.pt, truth(m.disease)), 0);
  EXPECT_EQ(covariance(m.prior, m.pt, m.pt), validity(m.prior, m.pt & m.pt) - q("17/40") * q("17/40"));
  const Evidence<R> psi(m.disease, {{m.pt, 1}, {m.nt, 1}});
  EXPECT_EQ(covariance(m.prior, m.pt, m.nt), (pearl_validity(m.prior, psi) - jeffrey_validity(m.prior, psi)) / 2);
}

TEST(Validity, NonMatchingEvidenceEscapesUnitInterval) {
  const SampleSpace ab{"a", "b"};
  const Evidence<R> psi(ab, {{fac(ab, {"1", "1/2"}), 2}, {fac(ab, {"4/5", "1/2"}), 3}});
  EXPECT_EQ(jeffrey_validity(uniform<R>(ab), psi), q("19773/12800"));
  EXPECT_EQ(pearl_validity(uniform<R>(ab), psi), q("2173/800"));
  EXPECT_GT(jeffrey_validity(uniform<R>(ab), psi), 1);
}

TEST(Validity, PointEvidenceIsMultinomial) {
  const SampleSpace rgb{"R", "G", "B"};
  const Dist<R> w = dist(rgb, {"1/2", "1/3", "1/6"});
  for (const auto& phi : enumerate_multisets(rgb, 3))
    EXPECT_EQ(jeffrey_validity(w, point_evidence(phi)), multinomial(3, w)[phi.ket()]) << phi.ket();
}

TEST(Validity, LogLikelihoodScore) {
  const Medical& m = medical();
  const Evidence<R> psi = m.evidence(2, 1);
  EXPECT_EQ(log_likelihood_score(m.prior, m.prior, psi), 0.0);
  const Dist<R> wj = jeffrey_update(m.prior, psi);
  EXPECT_LT(log_likelihood_score(m.prior, wj, psi), 0.0);
  EXPECT_LT(jeffrey_validity(m.prior, psi), jeffrey_validity(wj, psi));
}

}  // namespace
}  // namespace wiser::test
