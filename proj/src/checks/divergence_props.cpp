#include "generators.hpp"
#include "registry.hpp"
#include "wiser/grid.hpp"

namespace wiser::checks::detail {

namespace {

std::vector<Property> divergence_props() {
  std::vector<Property> ps;

  ps.push_back({"divergence.nonnegative_zero_iff_equal", Kind::ForAll, [](Rng& g) {
                  const SampleSpace s = gen_space(g);
                  const Dist<R> a = gen_dist(g, s), b = coin(g) ? a : gen_dist(g, s, true);
                  const double d = kl_divergence(a, b);
                  if (d < 0) return failure("negative divergence " + shortest(d));
                  if ((d == 0) != (a == b)) return failure("D(" + ket(a) + ", " + ket(b) + ") = " + shortest(d));
                  return pass();
                }});

  ps.push_back({"divergence.asymmetric", Kind::Exists, [](Rng& g) {
                  const SampleSpace s = gen_space(g, 2, 6);
                  const Dist<R> a = gen_dist(g, s, true), b = gen_dist(g, s, true);
                  const double ab = kl_divergence(a, b), ba = kl_divergence(b, a);
                  if (std::abs(ab - ba) <= 1e-12) return failure("symmetric pair");
                  return pass(ket(a) + ", " + ket(b) + ": " + shortest(ab) + " vs " + shortest(ba));
                }});

  ps.push_back({"divergence.order_matches_validity", Kind::ForAll, [](Rng& g) {
                  const SampleSpace s = gen_space(g);
                  const Dist<R> a = gen_dist(g, s, true), b = gen_dist(g, s, true);
                  const Multiset phi = gen_multiset(g, s, uniform_int(g, 1, 6));
                  const double da = kl_divergence(flrn(phi), a), db = kl_divergence(flrn(phi), b);
                  if (std::abs(da - db) < 1e-9) return skip("near tie");
                  const Evidence<R> psi = point_evidence(phi);
                  const bool by_validity = jeffrey_validity(a, psi) <= jeffrey_validity(b, psi);
                  if (by_validity != (da >= db)) return failure(phi.ket() + ": divergences " + shortest(da) + ", " + shortest(db));
                  return pass();
                }});

  ps.push_back({"divergence.channel_lower_bound", Kind::ForAll, [](Rng& g) {
                  const SampleSpace z = gen_space(g), x = gen_space(g);
                  const Dist<R> sigma = gen_dist(g, z);
                  const Channel<R> c = gen_channel(g, z, x, true);
                  const Dist<R> rho = gen_dist(g, x);
                  const double lhs = expected_channel_divergence(sigma, rho, c);
                  const double rhs = kl_divergence(rho, push(c, sigma));
                  if (lhs < rhs - 1e-9) return failure(shortest(lhs) + " < " + shortest(rhs));
                  return pass();
                }});

  ps.push_back({"divergence.free_energy_lower_bound", Kind::ForAll, [](Rng& g) {
                  const SampleSpace s = gen_space(g);
                  const Dist<R> w = gen_dist(g, s, true);
                  const Evidence<R> psi = gen_evidence(g, s);
                  const Dist<R> rho = gen_dist(g, s);
                  const double lhs = free_energy_objective(rho, w, psi);
                  const double rhs = kl_divergence(rho, jeffrey_update(w, psi));
                  if (lhs < rhs - 1e-9) return failure(shortest(lhs) + " < " + shortest(rhs) + " for " + show(psi));
                  return pass();
                }});
  return ps;
}

std::vector<Property> grid_props() {
  std::vector<Property> ps;

  ps.push_back({"grids.jeffrey_pearl_gap", Kind::Once, [](Rng&) {
                  const auto j = compute_grid(medical_grid(GridMode::JeffreyValidity));
                  const auto p = compute_grid(medical_grid(GridMode::PearlValidity));
                  double gap = 0.0;
                  for (std::size_t k = 0; k < j.size(); ++k)
                    gap = std::max(gap, std::abs((j[k].value - p[k].value).as_double()));
                  const std::string d = "max |J - P| = " + to_decimal(gap, 6);
                  return gap < 0.033 ? pass(d) : failure(d);
                }});

  ps.push_back({"grids.vfe_divergence_increases", Kind::Once, [](Rng&) {
                  std::size_t count = 0;
                  for (const auto& c : compute_grid(medical_grid(GridMode::VfeDklDelta)))
                    if (c.value.as_double() > 0) ++count;
                  const GridSpec spec = medical_grid(GridMode::VfeDklDelta);
                  std::size_t shifted = 0;
                  for (std::uint64_t i = 0; i < 10; ++i)
                    for (std::uint64_t j = 0; j < 10; ++j)
                      if ((i || j) && vfe_divergences(spec, i, j).second > vfe_divergences(spec, i, j).first) ++shifted;
                  const std::string d = std::to_string(count) + " of 100 cells with i,j in 1..10 (expected 37); " +
                                        std::to_string(shifted) + " with i,j in 0..9";
                  return count == 37 ? pass(d) : failure(d);
                }});
  return ps;
}

}  // namespace

void add_divergence(Suites& s) {
  s.emplace_back("divergence", divergence_props());
  s.emplace_back("grids", grid_props());
}

}  // namespace wiser::checks::detail
