#include "generators.hpp"
#include "registry.hpp"

namespace wiser::checks::detail {

namespace {

std::vector<Property> distribution_props() {
  std::vector<Property> ps;

  ps.push_back({"distribution.constructors_valid", Kind::ForAll, [](Rng& g) {
                  const SampleSpace s = gen_space(g, 1, 4);
                  const Dist<R> a = gen_dist(g, s), b = gen_dist(g, s);
                  const R r = gen_prob(g);
                  std::vector<Dist<R>> outs{gen_dirac(g, s), convex_sum<R>({r, R(1 - r)}, {a, b}), tensor(a, b), copy(a),
                                            multinomial(uniform_int(g, 0, 4), a)};
                  for (const auto& d : outs)
                    if (d.weights().sum() != 1 || (d.weights().array() < 0).any()) return failure("invalid output " + ket(d));
                  return pass();
                }});

  ps.push_back({"distribution.copy_is_tensor_iff_dirac", Kind::ForAll, [](Rng& g) {
                  const SampleSpace s = gen_space(g, 1, 4);
                  const Dist<R> w = coin(g) ? gen_dirac(g, s) : gen_dist(g, s);
                  const bool same = copy(w) == tensor(w, w);
                  if (same != w.is_dirac()) return failure("copy vs tensor disagree with diracness for " + ket(w));
                  return pass();
                }});

  ps.push_back({"distribution.multinomial_sums_to_one", Kind::ForAll, [](Rng& g) {
                  const SampleSpace s = gen_space(g, 1, 4);
                  const Dist<R> w = gen_dist(g, s);
                  const auto K = uniform_int(g, 0, 5);
                  const R total = multinomial(K, w).weights().sum();
                  if (total != 1) return failure("mn[" + std::to_string(K) + "](" + ket(w) + ") sums to " + to_string(total));
                  return pass();
                }});

  ps.push_back({"distribution.multinomial_is_acc_of_power", Kind::ForAll, [](Rng& g) {
                  const SampleSpace s = gen_space(g, 1, 4);
                  const Dist<R> w = gen_dist(g, s);
                  const auto K = uniform_int(g, 1, 5);
                  const Dist<R> power = tensor_power(w, K);
                  const SampleSpace mspace = multiset_space(s, K);
                  const Dist<R> pushed = push_function<R>(power, mspace, [&](std::size_t i) {
                    return mspace.index(acc_indices(power.space().unflatten(i), s).ket());
                  });
                  return expect_equal(pushed, multinomial(K, w), "D(acc)(w^K) vs mn[K](w)");
                }});

  ps.push_back({"distribution.marginals_of_tensor", Kind::ForAll, [](Rng& g) {
                  const Dist<R> a = gen_dist(g, gen_space(g, 1, 4)), b = gen_dist(g, gen_space(g, 1, 4));
                  const Dist<R> t = tensor(a, b);
                  if (!(marginal(t, 0) == a)) return failure("first marginal of " + ket(t));
                  if (!(marginal(t, 1) == b)) return failure("second marginal of " + ket(t));
                  return pass();
                }});
  return ps;
}

std::vector<Property> evidence_props() {
  std::vector<Property> ps;

  ps.push_back({"evidence.ortho_laws", Kind::ForAll, [](Rng& g) {
                  const Factor<R> p = gen_pred(g, gen_space(g));
                  if (!(ortho(ortho(p)) == p)) return failure("p-perp-perp != p for " + show(p));
                  if (!(p + ortho(p) == truth(p.space()))) return failure("p + p-perp != 1 for " + show(p));
                  return pass();
                }});

  ps.push_back({"evidence.conj_commutative_associative", Kind::ForAll, [](Rng& g) {
                  const SampleSpace s = gen_space(g);
                  const Factor<R> p = gen_factor(g, s), q = gen_factor(g, s), r = gen_factor(g, s);
                  if (!((p & q) == (q & p))) return failure("p & q != q & p");
                  if (!(((p & q) & r) == (p & (q & r)))) return failure("& not associative");
                  if (!((p & truth(s)) == p) || !((p & falsity(s)) == falsity(s))) return failure("unit/zero laws");
                  return pass();
                }});

  ps.push_back({"evidence.weakening", Kind::ForAll, [](Rng& g) {
                  const SampleSpace x = gen_space(g, 1, 4), y = gen_space(g, 1, 4);
                  const Dist<R> tau = gen_dist(g, SampleSpace::product({x, y}));
                  const Factor<R> p = gen_pred(g, x);
                  return expect_equal(validity(tau, tensor_factor(p, truth(y))), validity(marginal(tau, 0), p),
                                      "tau |= p(x)1 vs D(pi1)(tau) |= p");
                }});

  ps.push_back({"evidence.and_conj_additive", Kind::ForAll, [](Rng& g) {
                  const SampleSpace s = gen_space(g);
                  const Evidence<R> a = gen_evidence(g, s, {1, 6, 3, false, false});
                  const Evidence<R> b = gen_evidence(g, s, {1, 6, 3, false, false});
                  return expect_equal(and_conj(a + b), and_conj(a) & and_conj(b), "&(psi+chi)");
                }});

  ps.push_back({"evidence.tensor_conj_validity", Kind::ForAll, [](Rng& g) {
                  const SampleSpace s = gen_space(g, 1, 3);
                  const Evidence<R> psi = gen_evidence(g, s, {1, 4, 3, false, false});
                  const Dist<R> w = gen_dist(g, s);
                  R rhs(1);
                  for (std::size_t k = 0; k < psi.distinct(); ++k) rhs *= ipow(validity(w, psi.factors()[k]), psi.counts()[k]);
                  return expect_equal(validity(tensor_power(w, psi.size()), tensor_conj(psi)), rhs, "w^K |= (x)psi");
                }});

  ps.push_back({"evidence.frac_conj_power", Kind::ForAll, [](Rng& g) {
                  const SampleSpace s = gen_space(g);
                  const Evidence<R> psi = gen_evidence(g, s, {1, 6, 3, false, false});
                  const Factor<double> f = frac_conj(psi);
                  const Factor<R> a = and_conj(psi);
                  for (std::size_t i = 0; i < s.size(); ++i) {
                    const double lhs = std::pow(f(i), static_cast<double>(psi.size()));
                    if (!close(lhs, to_double(a(i)))) return failure("at " + s.label(i) + ": " + shortest(lhs) + " vs " + to_string(a(i)));
                  }
                  return pass();
                }});
  return ps;
}

}  // namespace

void add_distribution(Suites& s) {
  s.emplace_back("distribution", distribution_props());
  s.emplace_back("evidence", evidence_props());
}

}  // namespace wiser::checks::detail
