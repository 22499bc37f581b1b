#include "support.hpp"

namespace wiser::test {
namespace {

const SampleSpace abc{"a", "b", "c"};

TEST(Multiset, Accumulation) {
  EXPECT_EQ(acc({"c", "b", "a", "a", "b", "a"}, abc).ket(), "3|a> + 2|b> + 1|c>");
  const Multiset empty = acc({}, abc);
  EXPECT_EQ(empty.size(), 0u);
  EXPECT_EQ(empty.ket(), "0");
  EXPECT_EQ(acc({"a"}, abc).ket(), "1|a>");
  EXPECT_EQ(kind_of([] { (void)acc({"z"}, abc); }), ErrorKind::UnknownElement);
}

TEST(Multiset, FrequentistLearning) {
  EXPECT_EQ(ket(flrn(Multiset(abc, {3, 4, 5}))), "1/4|a> + 1/3|b> + 5/12|c>");
  EXPECT_EQ(flrn(Multiset(abc, {1, 0, 0})), dirac(abc, "a"));
  const SampleSpace t{"p", "n"};
  EXPECT_EQ(ket(flrn(Multiset(t, {2, 1}))), "2/3|p> + 1/3|n>");
  EXPECT_EQ(kind_of([] { (void)flrn(Multiset(abc)); }), ErrorKind::EmptyMultiset);
}

TEST(Multiset, Coefficient) {
  const Medical& m = medical();
  EXPECT_EQ(coefm(m.evidence(2, 1)), 3);
  EXPECT_EQ(coefm(Multiset(SampleSpace{"p", "q"}, {2, 3})), 10);
  EXPECT_EQ(coefm(Multiset(abc, {0, 7, 0})), 1);
  EXPECT_EQ(coefm(Multiset(abc)), 1);
}

TEST(Multiset, Enumeration) {
  EXPECT_EQ(enumerate_multisets(SampleSpace{"R", "G", "B"}, 3).size(), 10u);
  const auto zero = enumerate_multisets(abc, 0);
  ASSERT_EQ(zero.size(), 1u);
  EXPECT_EQ(zero[0].size(), 0u);
  const auto two = enumerate_multisets(SampleSpace{"a", "b"}, 2);
  ASSERT_EQ(two.size(), 3u);
  EXPECT_EQ(two[0].ket(), "2|a>");
  EXPECT_EQ(two[1].ket(), "1|a> + 1|b>");
  EXPECT_EQ(two[2].ket(), "2|b>");
}

TEST(Multiset, EnumerationSizeLimit) {
  std::vector<std::string> labels;
  for (int i = 0; i < 60; ++i) labels.push_back("x" + std::to_string(i));
  EXPECT_EQ(kind_of([&] { (void)enumerate_multisets(SampleSpace(labels), 10); }), ErrorKind::SizeLimit);
}

TEST(Multiset, Arithmetic) {
  const Multiset a(abc, {1, 2, 0}), b(abc, {0, 1, 3});
  EXPECT_EQ((a + b).ket(), "1|a> + 3|b> + 3|c>");
  EXPECT_EQ(a.scaled(3).size(), 9u);
  EXPECT_EQ(a.support(), (std::vector<std::size_t>{0, 1}));
}

}  // namespace
}  // namespace wiser::test
