#include <cmath>

#include "support.hpp"

namespace wiser::test {
namespace {

const SampleSpace lmr{"L", "M", "R"};
const SampleSpace ab{"a", "b"};

TEST(Factor, Constructors) {
  EXPECT_EQ(indicator(lmr, {"L", "R"}).values(), rvec({"1", "0", "1"}));
  EXPECT_EQ(ortho(point_pred(lmr, "M")), indicator(lmr, {"L", "R"}));
  EXPECT_EQ(truth(lmr), ortho(falsity(lmr)));
  EXPECT_EQ(point_pred(lmr, "R"), indicator(lmr, {"R"}));
  EXPECT_TRUE(indicator(lmr, {"L"}).is_sharp());
  EXPECT_FALSE(fac(ab, {"1/2", "1"}).is_sharp());
  EXPECT_FALSE(fac(ab, {"3/2", "1"}).is_predicate());
}

TEST(Factor, Validation) {
  EXPECT_EQ(kind_of([] { fac(ab, {"-1", "1"}); }), ErrorKind::NegativeValue);
  EXPECT_EQ(kind_of([] { (void)ortho(fac(ab, {"2", "0"})); }), ErrorKind::NotAPredicate);
  EXPECT_EQ(kind_of([] { (void)scale(R(-1), truth(ab)); }), ErrorKind::NegativeValue);
  EXPECT_EQ(kind_of([] { (void)(truth(ab) & truth(lmr)); }), ErrorKind::SpaceMismatch);
}

TEST(Factor, MedicalConjunction) {
  const Medical& m = medical();
  const Factor<R> ppnt = m.pt & m.pt & m.nt;
  EXPECT_EQ(ppnt["d"], q("81/1000"));
  EXPECT_EQ(ppnt["~d"], q("12/125"));
  EXPECT_EQ(m.pt + m.nt, truth(m.disease));
  EXPECT_EQ(and_conj(m.evidence(2, 1)), ppnt);
}

TEST(Factor, Laws) {
  const Factor<R> p = fac(ab, {"1/3", "3/4"});
  EXPECT_EQ(p & truth(ab), p);
  EXPECT_EQ(p & falsity(ab), falsity(ab));
  EXPECT_EQ(scale(q("2"), p).values(), rvec({"2/3", "3/2"}));
  EXPECT_EQ(table_text(p), "{a: 1/3, b: 3/4}");
}

TEST(Evidence, KeyedByPointwiseEquality) {
  const Factor<R> p = fac(ab, {"1/2", "1"});
  Evidence<R> e(ab);
  e.add(p, 2);
  e.add(fac(ab, {"2/4", "1"}), 1);
  e.add(truth(ab), 0);
  EXPECT_EQ(e.distinct(), 1u);
  EXPECT_EQ(e.size(), 3u);
  EXPECT_EQ(e.count(p), 3u);
  EXPECT_EQ(kind_of([] { (void)and_conj(Evidence<R>(ab)); }), ErrorKind::EmptyEvidence);
  EXPECT_EQ(kind_of([&] { e.add(truth(lmr), 1); }), ErrorKind::SpaceMismatch);
}

TEST(Evidence, Conjunctions) {
  const Factor<R> p = fac(ab, {"1/2", "1/3"}), r = fac(ab, {"1", "1/4"});
  const Evidence<R> psi(ab, {{p, 2}, {r, 3}});
  EXPECT_EQ(and_conj(psi), p & p & r & r & r);
  EXPECT_EQ(and_conj(Evidence<R>(ab, {{p, 1}})), p);
  EXPECT_EQ(tensor_conj(psi), tensor_factor<R>({p, p, r, r, r}));
  const Factor<R> single = tensor_conj(Evidence<R>(ab, {{p, 1}}));
  EXPECT_EQ(single.values(), p.values());
  EXPECT_EQ(single.size(), 2u);
}

TEST(Evidence, TensorConjValidityBruteForce) {
  const SampleSpace s{"x", "y", "z"};
  const Dist<R> w = dist(s, {"1/6", "1/3", "1/2"});
  const Factor<R> p = fac(s, {"1/2", "1", "1/5"}), r = fac(s, {"0", "2/3", "1"});
  const Evidence<R> psi(s, {{p, 3}, {r, 1}});
  // sum over X^4 of w(x1)..w(x4) p(x1) p(x2) p(x3) r(x4)
  R brute(0);
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = 0; b < 3; ++b)
      for (std::size_t c = 0; c < 3; ++c)
        for (std::size_t d = 0; d < 3; ++d)
          brute += w(a) * w(b) * w(c) * w(d) * p(a) * p(b) * p(c) * r(d);
  EXPECT_EQ(validity(tensor_power(w, 4), tensor_conj(psi)), brute);
  EXPECT_EQ(brute, ipow(validity(w, p), 3) * validity(w, r));
}

TEST(Evidence, FractionalConjunction) {
  const Factor<R> p = fac(ab, {"1/2", "0"}), r = fac(ab, {"1/4", "1"});
  EXPECT_EQ(frac_conj(Evidence<R>(ab, {{p, 1}})).values(), make_vec({0.5, 0.0}));
  const Factor<double> kp = frac_conj(Evidence<R>(ab, {{p, 5}}));
  EXPECT_NEAR(kp(0), 0.5, 1e-15);
  EXPECT_EQ(kp(1), 0.0);
  const Evidence<R> psi(ab, {{p, 1}, {r, 2}});
  const Factor<double> f = frac_conj(psi);
  EXPECT_NEAR(std::pow(f(0), 3.0), to_double(and_conj(psi)(0)), 1e-12);
  EXPECT_EQ(f(1), 0.0);
  EXPECT_FALSE(std::isnan(f(1)));
}

TEST(Evidence, MatchStatus) {
  const Medical& m = medical();
  EXPECT_EQ(match_status(m.evidence(2, 1)), MatchStatus::PerfectMatch);
  EXPECT_EQ(match_status(Evidence<R>(ab, {{truth(ab), 1}})), MatchStatus::PerfectMatch);
  const Evidence<R> bad(ab, {{fac(ab, {"1", "1/2"}), 2}, {fac(ab, {"4/5", "1/2"}), 3}});
  EXPECT_EQ(match_status(bad), MatchStatus::NoMatch);
  EXPECT_EQ(match_status(Evidence<R>(ab, {{fac(ab, {"1/2", "1/3"}), 4}})), MatchStatus::Match);
  EXPECT_EQ(to_string(MatchStatus::NoMatch), "NoMatch");
}

}  // namespace
}  // namespace wiser::test
