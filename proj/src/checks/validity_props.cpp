#include "generators.hpp"
#include "registry.hpp"

namespace wiser::checks::detail {

namespace {

std::vector<Property> validity_props() {
  std::vector<Property> ps;

  ps.push_back({"validity.linearity", Kind::ForAll, [](Rng& g) {
                  const SampleSpace s = gen_space(g);
                  const Dist<R> w = gen_dist(g, s);
                  const Factor<R> p = gen_factor(g, s), q = gen_factor(g, s);
                  const R k = gen_prob(g) * 3;
                  if (validity(w, p + q) != validity(w, p) + validity(w, q)) return failure("w |= p+q");
                  if (validity(w, scale(k, p)) != k * validity(w, p)) return failure("w |= s.p");
                  return pass();
                }});

  ps.push_back({"validity.monotone", Kind::ForAll, [](Rng& g) {
                  const SampleSpace s = gen_space(g);
                  const Dist<R> w = gen_dist(g, s);
                  const Factor<R> p = gen_factor(g, s);
                  const Factor<R> q = p + gen_factor(g, s);
                  if (validity(w, p) > validity(w, q)) return failure("p <= q but w |= p > w |= q");
                  return pass();
                }});

  ps.push_back({"validity.orthosupplement", Kind::ForAll, [](Rng& g) {
                  const SampleSpace s = gen_space(g);
                  const Dist<R> w = gen_dist(g, s);
                  const Factor<R> p = gen_pred(g, s);
                  return expect_equal(validity(w, ortho(p)), R(1 - validity(w, p)), "w |= p-perp");
                }});

  ps.push_back({"validity.tensor_product", Kind::ForAll, [](Rng& g) {
                  const SampleSpace x = gen_space(g, 1, 4), y = gen_space(g, 1, 4);
                  const Dist<R> w = gen_dist(g, x), r = gen_dist(g, y);
                  const Factor<R> p = gen_factor(g, x), q = gen_factor(g, y);
                  return expect_equal(validity(tensor(w, r), tensor_factor(p, q)), R(validity(w, p) * validity(r, q)),
                                      "(w(x)r) |= (p(x)q)");
                }});

  ps.push_back({"validity.conj_via_copy", Kind::ForAll, [](Rng& g) {
                  const SampleSpace s = gen_space(g);
                  const Dist<R> w = gen_dist(g, s);
                  const Factor<R> p = gen_factor(g, s), q = gen_factor(g, s);
                  return expect_equal(validity(w, p & q), validity(copy(w), tensor_factor(p, q)), "w |= p&q vs D(copy)(w) |= p(x)q");
                }});

  ps.push_back({"validity.matching_in_unit_interval", Kind::ForAll, [](Rng& g) {
                  const SampleSpace s = gen_space(g);
                  const Dist<R> w = gen_dist(g, s);
                  const auto m = uniform_int(g, 1, 3);
                  const auto ps_ = gen_matching(g, s, m, coin(g));
                  Evidence<R> psi(s);
                  for (const auto& p : ps_) psi.add(p, uniform_int(g, 1, 2));
                  if (match_status(psi) == MatchStatus::NoMatch) return failure("generator produced non-matching evidence");
                  const R j = jeffrey_validity(w, psi), pv = pearl_validity(w, psi);
                  if (j < 0 || j > 1) return failure("Jeffrey validity " + to_string(j) + " for " + show(psi));
                  if (pv < 0 || pv > 1) return failure("Pearl validity " + to_string(pv) + " for " + show(psi));
                  return pass();
                }});

  ps.push_back({"validity.perfect_match_normalisation", Kind::ForAll, [](Rng& g) {
                  const SampleSpace s = gen_space(g);
                  const Dist<R> w = gen_dist(g, s);
                  const auto m = uniform_int(g, 1, 3);
                  const auto P = gen_matching(g, s, m, true);
                  for (std::size_t a = 0; a < P.size(); ++a)
                    for (std::size_t b = a + 1; b < P.size(); ++b)
                      if (P[a] == P[b]) return skip("coinciding factors");
                  const SampleSpace pspace = space_of(m);
                  const auto K = uniform_int(g, 1, 4);
                  R j(0), pv(0);
                  for (const auto& phi : enumerate_multisets(pspace, K)) {
                    Evidence<R> psi(s);
                    for (std::size_t k = 0; k < m; ++k) psi.add(P[k], phi(k));
                    j += jeffrey_validity(w, psi);
                    pv += pearl_validity(w, psi);
                  }
                  if (j != 1) return failure("Jeffrey sum " + to_string(j));
                  if (pv != 1) return failure("Pearl sum " + to_string(pv));
                  return pass();
                }});

  ps.push_back({"validity.non_matching_example", Kind::Once, [](Rng&) {
                  const SampleSpace s{"a", "b"};
                  const Factor<R> p(s, rvec({"1", "1/2"})), q(s, rvec({"4/5", "1/2"}));
                  const Evidence<R> psi(s, {{p, 2}, {q, 3}});
                  const Dist<R> w = uniform(s);
                  if (match_status(psi) != MatchStatus::NoMatch) return failure("expected NoMatch");
                  if (jeffrey_validity(w, psi) != R(19773, 12800)) return failure("Jeffrey " + to_string(jeffrey_validity(w, psi)));
                  if (pearl_validity(w, psi) != R(2173, 800)) return failure("Pearl " + to_string(pearl_validity(w, psi)));
                  return pass("19773/12800 and 2173/800");
                }});

  ps.push_back({"validity.point_evidence_is_multinomial", Kind::ForAll, [](Rng& g) {
                  const SampleSpace s = gen_space(g, 1, 4);
                  const Dist<R> w = gen_dist(g, s);
                  const Multiset phi = gen_multiset(g, s, uniform_int(g, 1, 5));
                  return expect_equal(jeffrey_validity(w, point_evidence(phi)), multinomial(phi.size(), w)[phi.ket()],
                                      "w |=J " + phi.ket());
                }});

  ps.push_back({"validity.flrn_maximises_jeffrey", Kind::ForAll, [](Rng& g) {
                  const SampleSpace s = gen_space(g, 1, 4);
                  const Multiset phi = gen_multiset(g, s, uniform_int(g, 1, 6));
                  const auto loglik = [&](const Vec<double>& c) {
                    double l = 0.0;
                    for (std::size_t i = 0; i < s.size(); ++i) {
                      if (!phi(i)) continue;
                      if (c[static_cast<Eigen::Index>(i)] <= 0.0) return -std::numeric_limits<double>::infinity();
                      l += static_cast<double>(phi(i)) * std::log(c[static_cast<Eigen::Index>(i)]);
                    }
                    return l;
                  };
                  const double best = loglik(flrn(phi).cast<double>().weights());
                  for (int k = 0; k < 1000; ++k) {
                    const Dist<double> c = gen_dist_double(g, s);
                    if (loglik(c.weights()) > best + 1e-12) return failure("random candidate beats Flrn: " + ket(c));
                  }
                  if (s.size() <= 3) {
                    for (const auto& m : enumerate_multisets(s, 10)) {
                      const Vec<double> c = flrn(m).cast<double>().weights();
                      if (loglik(c) > best + 1e-12) return failure("grid point beats Flrn: " + m.ket());
                    }
                  }
                  return pass();
                }});

  ps.push_back({"validity.jeffrey_below_pearl_for_repeats", Kind::ForAll, [](Rng& g) {
                  const SampleSpace s = gen_space(g);
                  const Dist<R> w = gen_dist(g, s);
                  const Evidence<R> psi(s, {{gen_factor(g, s), uniform_int(g, 1, 6)}});
                  if (jeffrey_validity(w, psi) > pearl_validity(w, psi)) return failure("n|p> with Jeffrey > Pearl: " + show(psi));
                  return pass();
                }});

  ps.push_back({"validity.covariance_gap", Kind::ForAll, [](Rng& g) {
                  const SampleSpace s = gen_space(g);
                  const Dist<R> w = gen_dist(g, s);
                  const Factor<R> p1 = gen_pred(g, s), p2 = gen_pred(g, s);
                  if (p1 == p2) return skip("equal factors");
                  const Evidence<R> psi(s, {{p1, 1}, {p2, 1}});
                  return expect_equal(covariance(w, p1, p2), R((pearl_validity(w, psi) - jeffrey_validity(w, psi)) / 2),
                                      "Cov vs (P-J)/2");
                }});

  ps.push_back({"validity.log_likelihood_sign", Kind::ForAll, [](Rng& g) {
                  const SampleSpace s = gen_space(g);
                  const Dist<R> w = gen_dist(g, s), w2 = gen_dist(g, s);
                  const Evidence<R> psi = gen_evidence(g, s);
                  const double score = log_likelihood_score(w, w2, psi);
                  const R j1 = jeffrey_validity(w, psi), j2 = jeffrey_validity(w2, psi);
                  if (j1 == j2) return std::abs(score) < 1e-9 ? pass() : failure("equal validities, score " + shortest(score));
                  if (std::abs(score) < 1e-12) return skip("near tie");
                  if ((score <= 0) != (j1 <= j2)) return failure("score " + shortest(score) + " vs validities " + to_string(j1) + ", " + to_string(j2));
                  return pass();
                }});

  ps.push_back({"validity.iterated_pearl", Kind::ForAll, [](Rng& g) {
                  const SampleSpace s = gen_space(g);
                  const Dist<R> w = gen_dist(g, s, true);
                  std::vector<Factor<R>> fs;
                  const auto n = uniform_int(g, 1, 6);
                  for (std::uint64_t k = 0; k < n; ++k) fs.push_back(gen_pred(g, s, true));
                  const R it = iterated_pearl_validity(w, fs);
                  Factor<R> all = truth(s);
                  Evidence<R> psi(s);
                  for (const auto& f : fs) {
                    all = all & f;
                    psi.add(f, 1);
                  }
                  if (it != validity(w, all)) return failure("iterated " + to_string(it) + " vs w |= &ps " + to_string(validity(w, all)));
                  if (it != pearl_validity(w, psi) / R(coefm(psi))) return failure("iterated vs Pearl/coefm");
                  std::shuffle(fs.begin(), fs.end(), g);
                  if (iterated_pearl_validity(w, fs) != it) return failure("order dependence");
                  return pass();
                }});
  return ps;
}

}  // namespace

void add_validity(Suites& s) { s.emplace_back("validity", validity_props()); }

}  // namespace wiser::checks::detail
