#include "generators.hpp"
#include "registry.hpp"

namespace wiser::checks::detail {

namespace {

struct Setup {
  SampleSpace x, y;
  Dist<R> w;
  Channel<R> c;
};

Setup gen_setup(Rng& g, bool full = false) {
  const SampleSpace x = gen_space(g, 1, 4), y = gen_space(g, 1, 4);
  return {x, y, gen_dist(g, x, full), gen_channel(g, x, y, full)};
}

bool collides(const Evidence<R>& pulled, std::size_t expected) { return pulled.distinct() != expected; }

std::vector<Property> channel_props() {
  std::vector<Property> ps;

  ps.push_back({"channel.adjunction", Kind::ForAll, [](Rng& g) {
                  const Setup s = gen_setup(g);
                  const Factor<R> q = gen_factor(g, s.y);
                  return expect_equal(validity(push(s.c, s.w), q), validity(s.w, pull(s.c, q)), "(c >> w) |= q");
                }});

  ps.push_back({"channel.jeffrey_validity_along", Kind::ForAll, [](Rng& g) {
                  const Setup s = gen_setup(g);
                  const Evidence<R> psi = gen_evidence(g, s.y, {1, 6, 3, true, false});
                  const Evidence<R> pulled = triple_pull(s.c, psi);
                  if (collides(pulled, psi.distinct())) return skip("pulled factors collide");
                  return expect_equal(jeffrey_validity(s.w, pulled), jeffrey_validity(push(s.c, s.w), psi), "w |=J c <<< psi");
                }});

  ps.push_back({"channel.pearl_validity_along_differs", Kind::Exists, [](Rng& g) {
                  const Setup s = gen_setup(g);
                  const Evidence<R> psi = gen_evidence(g, s.y, {2, 6, 3, true, true});
                  const R a = pearl_validity(s.w, triple_pull(s.c, psi)), b = pearl_validity(push(s.c, s.w), psi);
                  if (a == b) return failure("equal");
                  return pass("w=" + ket(s.w) + ", c: " + show(s.c) + ", psi=" + show(psi) + ": " + to_string(a) + " vs " + to_string(b));
                }});

  ps.push_back({"channel.point_jeffrey_is_multinomial", Kind::ForAll, [](Rng& g) {
                  const Setup s = gen_setup(g);
                  const Multiset phi = gen_multiset(g, s.y, uniform_int(g, 1, 6));
                  const Evidence<R> pulled = triple_pull(s.c, phi);
                  if (collides(pulled, phi.support().size())) return skip("pulled factors collide");
                  return expect_equal(jeffrey_validity(s.w, pulled), multinomial(phi.size(), push(s.c, s.w))[phi.ket()],
                                      "w |=J c <<< " + phi.ket());
                }});

  ps.push_back({"channel.point_pearl_is_multinomial_channel", Kind::ForAll, [](Rng& g) {
                  const Setup s = gen_setup(g);
                  const Multiset phi = gen_multiset(g, s.y, uniform_int(g, 1, 6));
                  const Evidence<R> pulled = triple_pull(s.c, phi);
                  if (collides(pulled, phi.support().size())) return skip("pulled factors collide");
                  return expect_equal(pearl_validity(s.w, pulled), push(multinomial_channel(s.c, phi.size()), s.w)[phi.ket()],
                                      "w |=P c <<< " + phi.ket());
                }});

  ps.push_back({"channel.dagger_is_jeffrey_along", Kind::ForAll, [](Rng& g) {
                  const Setup s = gen_setup(g, true);
                  const Multiset phi = gen_multiset(g, s.y, uniform_int(g, 1, 6));
                  const Dist<R> updated = jeffrey_update(s.w, triple_pull(s.c, phi));
                  return expect_equal(updated, push(dagger(s.c, s.w), flrn(phi)), "w<J c <<< " + phi.ket() + ">");
                }});

  ps.push_back({"channel.jeffrey_along_gains", Kind::ForAll, [](Rng& g) {
                  const Setup s = gen_setup(g, true);
                  const Multiset phi = gen_multiset(g, s.y, uniform_int(g, 1, 6));
                  const Dist<R> after = push(dagger(s.c, s.w), flrn(phi));
                  const auto mn_before = multinomial(phi.size(), push(s.c, s.w))[phi.ket()];
                  const auto mn_after = multinomial(phi.size(), push(s.c, after))[phi.ket()];
                  if (mn_after < mn_before) return failure("multinomial validity dropped for " + phi.ket());
                  const double d0 = kl_divergence(flrn(phi), push(s.c, s.w));
                  const double d1 = kl_divergence(flrn(phi), push(s.c, after));
                  if (d1 > d0 + 1e-9) return failure("divergence rose for " + phi.ket() + ": " + shortest(d0) + " -> " + shortest(d1));
                  return pass();
                }});

  ps.push_back({"channel.pearl_along_is_multinomial_dagger", Kind::ForAll, [](Rng& g) {
                  const Setup s = gen_setup(g, true);
                  const Multiset phi = gen_multiset(g, s.y, uniform_int(g, 1, 6));
                  const Channel<R> mc = multinomial_channel(s.c, phi.size());
                  const Dist<R> updated = pearl_update(s.w, triple_pull(s.c, phi));
                  const Dist<R> via_pull = bayes_update(s.w, pull(mc, point_pred(mc.cod(), phi.ket())));
                  if (!(updated == via_pull)) return failure("w<P> vs w|(mn(c) << 1_phi): " + ket(updated) + " != " + ket(via_pull));
                  return expect_equal(updated, dagger(mc, s.w)(phi.ket()), "mn(c)-dagger at " + phi.ket());
                }});

  ps.push_back({"channel.pearl_along_gains", Kind::ForAll, [](Rng& g) {
                  const Setup s = gen_setup(g, true);
                  const Multiset phi = gen_multiset(g, s.y, uniform_int(g, 1, 6));
                  const Channel<R> mc = multinomial_channel(s.c, phi.size());
                  const Dist<R> after = pearl_update(s.w, triple_pull(s.c, phi));
                  if (push(mc, after)[phi.ket()] < push(mc, s.w)[phi.ket()]) return failure("validity dropped for " + phi.ket());
                  return pass();
                }});
  return ps;
}

}  // namespace

void add_channel(Suites& s) { s.emplace_back("channel", channel_props()); }

}  // namespace wiser::checks::detail
