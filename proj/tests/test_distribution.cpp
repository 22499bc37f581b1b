#include <map>

#include "support.hpp"

namespace wiser::test {
namespace {

const SampleSpace ab{"a", "b"};
const SampleSpace coin{"H", "T"};

TEST(Dist, ValidatesWeights) {
  EXPECT_EQ(kind_of([] { dist(ab, {"1/2", "1/3"}); }), ErrorKind::NotADistribution);
  EXPECT_EQ(kind_of([] { dist(ab, {"3/2", "-1/2"}); }), ErrorKind::NotADistribution);
  EXPECT_EQ(kind_of([] { Dist<R>::normalized(ab, rvec({"0", "0"})); }), ErrorKind::ZeroValidity);
  EXPECT_NO_THROW(Dist<double>(ab, make_vec({0.1, 0.9})));
}

TEST(Dist, Dirac) {
  EXPECT_EQ(ket(dirac(ab, "a")), "1|a>");
  EXPECT_EQ(bayes_update(dirac(ab, "a"), fac(ab, {"1/3", "1"})), dirac(ab, "a"));
  EXPECT_EQ(flrn(Multiset(ab, {1, 0})), dirac(ab, "a"));
}

TEST(Dist, ConvexSum) {
  const Dist<R> d = convex_sum<R>({q("1/3"), q("2/3")}, {dist(ab, {"1/2", "1/2"}), dist(ab, {"1/4", "3/4"})});
  EXPECT_EQ(ket(d), "1/3|a> + 2/3|b>");
  const Dist<R> w = dist(ab, {"1/5", "4/5"});
  EXPECT_EQ(convex_sum<R>({R(1)}, {w}), w);
  EXPECT_EQ(convex_sum<R>({q("1/2"), q("1/2")}, {dirac(ab, "a"), dirac(ab, "b")}), uniform(ab));
  EXPECT_EQ(kind_of([&] { (void)convex_sum<R>({q("1/2"), q("1/3")}, {w, w}); }), ErrorKind::WeightsNotConvex);
}

TEST(Dist, TensorOfCoins) {
  const Dist<R> s = uniform(coin);
  const Dist<R> t = tensor(s, s);
  for (std::size_t i = 0; i < 4; ++i) EXPECT_EQ(t(i), q("1/4"));
  EXPECT_EQ(marginal(tensor(s, dirac(ab, "b")), 0), s);
  const Dist<R> w = dist(ab, {"1/3", "2/3"});
  EXPECT_EQ(tensor_power(w, 1).weights(), w.weights());
}

TEST(Dist, CopyIsNotTensor) {
  const Dist<R> s = uniform(coin);
  EXPECT_EQ(ket(copy(s)), "1/2|H,H> + 1/2|T,T>");
  EXPECT_FALSE(copy(s) == tensor(s, s));
  EXPECT_EQ(copy(dirac(coin, "T")), tensor(dirac(coin, "T"), dirac(coin, "T")));
}

TEST(Dist, PushForward) {
  const Dist<R> w = dist(ab, {"1/3", "2/3"}), r = uniform(coin);
  EXPECT_EQ(marginal(tensor(w, r), 0), w);
  EXPECT_EQ(marginal(tensor(w, r), 1), r);
  EXPECT_EQ(push_function<R>(w, ab, [](std::size_t i) { return i; }), w);
  const SampleSpace one{"*"};
  EXPECT_EQ(push_function<R>(w, one, [](std::size_t) { return std::size_t{0}; }), dirac(one, "*"));
}

TEST(Dist, EqualityOnUnionOfLabels) {
  const SampleSpace abc{"a", "b", "c"};
  EXPECT_EQ(dist(ab, {"1/2", "1/2"}), dist(abc, {"1/2", "1/2", "0"}));
  EXPECT_FALSE(dist(ab, {"1/2", "1/2"}) == dist(abc, {"1/2", "0", "1/2"}));
}

TEST(Dist, MultinomialThreeDraws) {
  const SampleSpace rgb{"R", "G", "B"};
  const Dist<R> mn = multinomial(3, dist(rgb, {"1/2", "1/3", "1/6"}));
  const std::map<std::string, std::string> expected{
      {"3|R>", "1/8"},          {"2|R> + 1|G>", "1/4"},   {"2|R> + 1|B>", "1/8"},
      {"1|R> + 2|G>", "1/6"},   {"1|R> + 1|G> + 1|B>", "1/6"}, {"1|R> + 2|B>", "1/24"},
      {"3|G>", "1/27"},         {"2|G> + 1|B>", "1/18"},  {"1|G> + 2|B>", "1/36"},
      {"3|B>", "1/216"}};
  ASSERT_EQ(mn.size(), expected.size());
  for (const auto& [draw, p] : expected) EXPECT_EQ(mn[draw], q(p)) << draw;
  EXPECT_EQ(mn.weights().sum(), 1);
}

TEST(Dist, MultinomialEdgeCases) {
  const Dist<R> w = dist(ab, {"1/5", "4/5"});
  const Dist<R> zero = multinomial(0, w);
  ASSERT_EQ(zero.size(), 1u);
  EXPECT_EQ(zero(0), 1);
  const Dist<R> one = multinomial(1, w);
  EXPECT_EQ(one["1|a>"], q("1/5"));
  EXPECT_EQ(one["1|b>"], q("4/5"));
}

TEST(Dist, KetOmitsZeros) {
  EXPECT_EQ(ket(dist(SampleSpace{"L", "M", "R"}, {"3/4", "0", "1/4"})), "3/4|L> + 1/4|R>");
}

}  // namespace
}  // namespace wiser::test
