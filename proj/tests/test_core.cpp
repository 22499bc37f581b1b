#include <cmath>
#include <numbers>

#include "support.hpp"

namespace wiser::test {
namespace {

double ln_half_series() {
  // ln(1/2) = -sum_k 1/(k 2^k)
  double s = 0.0, p = 1.0;
  for (int k = 1; k < 60; ++k) {
    p /= 2.0;
    s += p / k;
  }
  return -s;
}

TEST(Rational, ParsesAndReduces) {
  EXPECT_EQ(to_string(q("6/8")), "3/4");
  EXPECT_EQ(to_string(q("0.05")), "1/20");
  EXPECT_EQ(to_string(q("-12/4")), "-3");
  EXPECT_EQ(to_string(q("17")), "17");
  EXPECT_EQ(boost::multiprecision::denominator(q("-2/4")), 2);
  EXPECT_EQ(q("0.02756"), q("689/25000"));
  EXPECT_EQ(q("010/010"), 1);
  EXPECT_EQ(q("-0017"), -17);
}

TEST(Rational, RejectsMalformedText) {
  for (auto s : {"", "1/0", "a", "1/-2", "1.2.3", "/3"}) EXPECT_THROW(parse_rational(s), ParseError) << s;
}

TEST(Rational, DecimalRendering) {
  EXPECT_EQ(to_decimal(q("1")), "1.00000000000");
  EXPECT_EQ(to_decimal(q("431/5865")), "0.0734867860188");
  EXPECT_EQ(to_decimal(q("1/8"), 1), "0.1");
  EXPECT_EQ(to_decimal(q("3/8"), 2), "0.38");
  EXPECT_EQ(to_decimal(q("-5/2"), 1), "-2");
  EXPECT_EQ(to_decimal(0.5, 3), "0.500");
}

TEST(Scalar, ExactArithmeticStaysExact) {
  const Scalar a(q("1/3")), b(q("1/6"));
  EXPECT_TRUE((a + b).exact());
  EXPECT_EQ((a + b).str(), "1/2");
  EXPECT_EQ((a * b).str(), "1/18");
  EXPECT_EQ((a / b).str(), "2");
  EXPECT_EQ((a - b - b).str(), "0");
}

TEST(Scalar, FloatIsContagious) {
  const Scalar a(q("1/4")), f(0.5);
  EXPECT_FALSE((a + f).exact());
  EXPECT_DOUBLE_EQ((a + f).as_double(), 0.75);
  EXPECT_FALSE(scalar_exp(Scalar(0)).exact());
  EXPECT_TRUE(scalar_pow(a, Scalar(2)).exact());
  EXPECT_EQ(scalar_pow(a, Scalar(2)).str(), "1/16");
  EXPECT_FALSE(scalar_pow(a, Scalar(q("1/2"))).exact());
}

TEST(Scalar, DivisionByExactZero) {
  EXPECT_EQ(kind_of([] { (void)(Scalar(1) / Scalar(0)); }), ErrorKind::ZeroValidity);
}

TEST(Scalar, Ln) {
  EXPECT_EQ(scalar_ln(Scalar(1)).as_double(), 0.0);
  EXPECT_FALSE(scalar_ln(Scalar(1)).exact());
  EXPECT_NEAR(scalar_ln(Scalar(std::numbers::e)).as_double(), 1.0, 1e-12);
  const double half = scalar_ln(Scalar(q("1/2"))).as_double();
  EXPECT_NEAR(half, -0.6931471805599453, 1e-12);
  EXPECT_NEAR(half, ln_half_series(), 1e-12);
  EXPECT_EQ(kind_of([] { (void)scalar_ln(Scalar(0)); }), ErrorKind::NonPositiveLog);
  EXPECT_EQ(kind_of([] { (void)scalar_ln(Scalar(-0.5)); }), ErrorKind::NonPositiveLog);
}

TEST(Scalar, ParseModes) {
  EXPECT_TRUE(parse_scalar("3/9").exact());
  EXPECT_EQ(parse_scalar("3/9").str(), "1/3");
}

TEST(SampleSpace, LabelsAndIndex) {
  const SampleSpace s{"a", "b", "c"};
  EXPECT_EQ(s.size(), 3u);
  EXPECT_EQ(s.index("c"), 2u);
  EXPECT_TRUE(s.contains("b"));
  EXPECT_EQ(kind_of([&] { (void)s.index("z"); }), ErrorKind::UnknownElement);
  EXPECT_EQ(kind_of([] { SampleSpace{"a", "a"}; }), ErrorKind::DuplicateElement);
}

TEST(SampleSpace, ProductOrder) {
  const SampleSpace c{"H", "T"};
  const SampleSpace p = SampleSpace::power(c, 2);
  EXPECT_EQ(p.labels(), (std::vector<std::string>{"H,H", "H,T", "T,H", "T,T"}));
  EXPECT_EQ(p.unflatten(2), (std::vector<std::size_t>{1, 0}));
  EXPECT_EQ(p.flatten({0, 1}), 1u);
}

TEST(SampleSpace, SizeLimit) {
  std::vector<std::string> labels;
  for (int i = 0; i < 1001; ++i) labels.push_back(std::to_string(i));
  const SampleSpace big(labels);
  EXPECT_EQ(kind_of([&] { (void)SampleSpace::power(big, 2); }), ErrorKind::SizeLimit);
}

}  // namespace
}  // namespace wiser::test
