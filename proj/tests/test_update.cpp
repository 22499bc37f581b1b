#include <cmath>

#include "support.hpp"

namespace wiser::test {
namespace {

const SampleSpace lmr{"L", "M", "R"};

TEST(Bayes, Medical) {
  const Medical& m = medical();
  EXPECT_EQ(ket(bayes_update(m.prior, m.pt)), "9/85|d> + 76/85|~d>");
  EXPECT_EQ(ket(bayes_update(m.prior, m.nt)), "1/115|d> + 114/115|~d>");
}

TEST(Bayes, Physics) {
  const Dist<R> w = dist(lmr, {"1/2", "1/3", "1/6"});
  EXPECT_EQ(bayes_update(w, indicator(lmr, {"L", "R"})).weights(), rvec({"3/4", "0", "1/4"}));
  EXPECT_EQ(bayes_update(w, fac(lmr, {"2/3", "1/3", "1/2"})).weights(), rvec({"12/19", "4/19", "3/19"}));
}

TEST(Bayes, ZeroValidity) {
  const Dist<R> w = dist(lmr, {"1/2", "1/2", "0"});
  EXPECT_EQ(kind_of([&] { (void)bayes_update(w, point_pred(lmr, "R")); }), ErrorKind::ZeroValidity);
}

TEST(Jeffrey, Medical) {
  const Medical& m = medical();
  EXPECT_EQ(ket(jeffrey_update(m.prior, m.evidence(2, 1))), "431/5865|d> + 5434/5865|~d>");
  EXPECT_EQ(jeffrey_update(m.prior, m.evidence(1, 0)), bayes_update(m.prior, m.pt));
}

TEST(Jeffrey, InconsistentEvidence) {
  const Dist<R> w = dist(lmr, {"1/2", "1/3", "1/6"});
  const Factor<R> u = indicator(lmr, {"L"});
  const Evidence<R> psi(lmr, {{u, 1}, {ortho(u), 1}});
  const Dist<R> expected =
      convex_sum<R>({q("1/2"), q("1/2")}, {bayes_update(w, u), bayes_update(w, ortho(u))});
  EXPECT_EQ(jeffrey_update(w, psi), expected);
  EXPECT_EQ(kind_of([&] { (void)pearl_update(w, psi); }), ErrorKind::ZeroValidity);
}

TEST(Jeffrey, NamesTheZeroValidityFactor) {
  const Dist<R> w = dist(lmr, {"1/2", "1/2", "0"});
  const Evidence<R> psi(lmr, {{truth(lmr), 1}, {point_pred(lmr, "R"), 1}});
  try {
    (void)jeffrey_update(w, psi);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ZeroValidity);
    EXPECT_NE(std::string(e.what()).find("factor 2"), std::string::npos);
  }
}

TEST(Jeffrey, OrderCounterexample) {
  const Medical& m = medical();
  const Evidence<R> psi = m.evidence(2, 1), chi = m.evidence(1, 2);
  const Dist<R> a = jeffrey_update(jeffrey_update(m.prior, psi), chi);
  const Dist<R> b = jeffrey_update(jeffrey_update(m.prior, chi), psi);
  EXPECT_NEAR(to_double(a["d"]), 0.059, 5e-4);
  EXPECT_NEAR(to_double(b["d"]), 0.061, 5e-4);
  EXPECT_FALSE(a == b);
}

TEST(Jeffrey, ConvexSumNeedsEqualSizes) {
  const SampleSpace s{"x", "y", "z"};
  const Dist<R> w = uniform<R>(s);
  const Factor<R> p = point_pred(s, "x"), qf = point_pred(s, "y"), r = point_pred(s, "z");
  const Evidence<R> a(s, {{p, 1}}), b(s, {{qf, 1}, {r, 1}});
  const Dist<R> literal = convex_sum<R>({q("1/2"), q("1/2")}, {jeffrey_update(w, a), jeffrey_update(w, b)});
  const Dist<R> combined = jeffrey_update(w, a + b);
  EXPECT_EQ(ket(literal), "1/2|x> + 1/4|y> + 1/4|z>");
  EXPECT_EQ(ket(combined), "1/3|x> + 1/3|y> + 1/3|z>");
  EXPECT_FALSE(literal == combined);
  EXPECT_EQ(convex_sum<R>({q("1/3"), q("2/3")}, {jeffrey_update(w, a), jeffrey_update(w, b)}), combined);
}

TEST(Jeffrey, WeightedExtension) {
  const Medical& m = medical();
  const Dist<R> a = jeffrey_update_weighted<R>(m.prior, {{m.pt, q("2/3")}, {m.nt, q("1/3")}});
  EXPECT_EQ(a, jeffrey_update(m.prior, m.evidence(2, 1)));
}

TEST(Pearl, Medical) {
  const Medical& m = medical();
  EXPECT_EQ(ket(pearl_update(m.prior, m.evidence(2, 1))), "27/635|d> + 608/635|~d>");
  EXPECT_EQ(pearl_update(m.prior, m.evidence(0, 1)), bayes_update(m.prior, m.nt));
}

TEST(Pearl, LiteralProductRuleIsOffByCoefficients) {
  const Medical& m = medical();
  const Evidence<R> psi(m.disease, {{m.pt, 1}}), chi(m.disease, {{m.nt, 1}});
  const R lhs = pearl_validity(pearl_update(m.prior, psi), chi);
  const R literal = pearl_validity(m.prior, psi + chi) / pearl_validity(m.prior, psi);
  EXPECT_EQ(literal, 2 * lhs);
  EXPECT_EQ(lhs, R(coefm(psi) * coefm(chi)) / R(coefm(psi + chi)) * literal);
}

TEST(Rules, PosteriorValidities) {
  const Medical& m = medical();
  const Evidence<R> psi = m.evidence(2, 1);
  const Dist<R> wj = jeffrey_update(m.prior, psi), wp = pearl_update(m.prior, psi);
  EXPECT_NEAR(to_double(jeffrey_validity(wj, psi)), 0.322, 5e-4);
  EXPECT_NEAR(to_double(pearl_validity(wp, psi)), 0.2861, 5e-4);
  EXPECT_NEAR(to_double(jeffrey_validity(wp, psi)), 0.3081, 5e-4);
  EXPECT_NEAR(to_double(pearl_validity(wj, psi)), 0.2847, 5e-4);
  EXPECT_LT(jeffrey_validity(wp, psi), jeffrey_validity(m.prior, psi));
  EXPECT_LT(pearl_validity(wj, psi), pearl_validity(m.prior, psi));
}

TEST(Vfe, MedicalAlongChannel) {
  const Medical& m = medical();
  const Dist<double> v = vfe_update(m.prior, triple_pull(m.channel, m.outcomes(1, 1)));
  EXPECT_NEAR(v["d"], 0.031, 5e-4);
  EXPECT_NEAR(v["~d"], 0.969, 5e-4);
  const Dist<double> s = vfe_update_softmax(m.prior, m.evidence(1, 1));
  EXPECT_NEAR(s["d"], v["d"], 1e-12);
}

TEST(Vfe, SingleFactorIsBayes) {
  const Medical& m = medical();
  const Dist<double> bayes = bayes_update(m.prior, m.pt).cast<double>();
  for (std::uint64_t k = 1; k <= 4; ++k) {
    const Dist<double> v = vfe_update(m.prior, m.evidence(k, 0));
    EXPECT_NEAR(v(0), bayes(0), 1e-9);
    EXPECT_NEAR(v(1), bayes(1), 1e-9);
  }
}

TEST(Vfe, JeffreyValidityCanDrop) {
  const Medical& m = medical();
  const Evidence<R> chi = m.evidence(1, 1);
  const double before = to_double(jeffrey_validity(m.prior, chi));
  const double after = jeffrey_validity(vfe_update(m.prior, chi), chi.cast<double>());
  EXPECT_NEAR(before, 0.489, 5e-4);
  EXPECT_NEAR(after, 0.486, 5e-4);
  EXPECT_GT(before, after);
}

TEST(Vfe, PearlSandwichMedical) {
  const Medical& m = medical();
  const Evidence<R> psi = m.evidence(2, 1);
  const double lo = to_double(pearl_validity(m.prior, psi));
  const double mid = pearl_validity(vfe_update(m.prior, psi), psi.cast<double>());
  const double hi = to_double(pearl_validity(pearl_update(m.prior, psi), psi));
  EXPECT_LE(lo, mid);
  EXPECT_LE(mid, hi);
}

TEST(Vfe, ZeroFractionalConjunction) {
  const Dist<R> w = dist(lmr, {"1/2", "1/2", "0"});
  const Evidence<R> psi(lmr, {{point_pred(lmr, "L"), 1}, {point_pred(lmr, "M"), 1}});
  EXPECT_EQ(kind_of([&] { (void)vfe_update(w, psi); }), ErrorKind::ZeroValidity);
  EXPECT_EQ(kind_of([&] { (void)vfe_update_softmax(w, psi); }), ErrorKind::ZeroValidity);
}

TEST(FreeEnergy, ZeroAtOwnPosterior) {
  const Medical& m = medical();
  const Evidence<R> psi = m.evidence(1, 0);
  EXPECT_EQ(free_energy_objective(bayes_update(m.prior, m.pt), m.prior, psi), 0.0);
}

TEST(FreeEnergy, GapIsDivergence) {
  const Medical& m = medical();
  const Evidence<R> psi = m.evidence(3, 2);
  const Dist<double> v = vfe_update(m.prior, psi);
  const Dist<double> r(m.disease, make_vec({0.3, 0.7}));
  EXPECT_NEAR(free_energy_objective(r, m.prior, psi) - free_energy_objective(v, m.prior, psi), kl_divergence(r, v),
              1e-12);
}

TEST(FreeEnergy, SupportMismatch) {
  const Dist<R> w = dist(lmr, {"1/2", "1/2", "0"});
  const Evidence<R> psi(lmr, {{truth(lmr), 1}});
  EXPECT_EQ(kind_of([&] { (void)free_energy_objective(dist(lmr, {"0", "0", "1"}), w, psi); }),
            ErrorKind::SupportMismatch);
}

}  // namespace
}  // namespace wiser::test
