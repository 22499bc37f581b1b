#include <cmath>

#include "support.hpp"
#include "wiser/grid.hpp"

namespace wiser::test {
namespace {

TEST(Divergence, Basics) {
  const Medical& m = medical();
  EXPECT_EQ(kl_divergence(m.prior, m.prior), 0.0);
  const SampleSpace ab{"a", "b"};
  EXPECT_EQ(kind_of([&] { (void)kl_divergence(uniform<R>(ab), dirac(ab, "a")); }), ErrorKind::SupportViolation);
  EXPECT_NEAR(kl_divergence(dirac(ab, "a"), uniform<R>(ab)), std::log(2.0), 1e-15);
  EXPECT_NE(kl_divergence(m.prior, uniform<R>(m.disease)), kl_divergence(uniform<R>(m.disease), m.prior));
}

TEST(Divergence, MedicalCellOneOne) {
  const auto [before, after] = vfe_divergences(medical_grid(GridMode::VfeDklDelta), 1, 1);
  EXPECT_NEAR(before, 0.011378, 5e-6);
  EXPECT_NEAR(after, 0.014449, 5e-6);
  EXPECT_NEAR(before / std::log(2.0), 0.0164, 5e-4);
  EXPECT_NEAR(after / std::log(2.0), 0.0208, 5e-4);
}

TEST(Divergence, ExpectedChannelDivergence) {
  const Medical& m = medical();
  const Dist<R> r = dist(m.test, {"1/3", "2/3"});
  const Channel<R> c = constant_channel(m.disease, dist(m.test, {"1/4", "3/4"}));
  EXPECT_NEAR(expected_channel_divergence(m.prior, r, c), kl_divergence(r, c("d")), 1e-15);
  EXPECT_GE(expected_channel_divergence(m.prior, r, m.channel), kl_divergence(r, push(m.channel, m.prior)));
}

TEST(Divergence, FreeEnergyBoundsJeffrey) {
  const Medical& m = medical();
  const Evidence<R> psi = m.evidence(2, 1);
  const Dist<R> r = dist(m.disease, {"1/7", "6/7"});
  EXPECT_GE(free_energy_objective(r, m.prior, psi), kl_divergence(r, jeffrey_update(m.prior, psi)));
}

}  // namespace
}  // namespace wiser::test
