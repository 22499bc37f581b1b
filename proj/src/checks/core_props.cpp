#include <cmath>
#include <limits>

#include "generators.hpp"
#include "registry.hpp"

namespace wiser::checks::detail {

namespace {

std::vector<Property> core_props() {
  std::vector<Property> ps;

  ps.push_back({"core.exact_roundtrip", Kind::ForAll, [](Rng& g) {
                  const Scalar a(gen_rational(g)), b(gen_rational(g));
                  if (!((a + b) - b == a)) return failure("(a+b)-b != a for a=" + a.str() + ", b=" + b.str());
                  if (b == Scalar(0)) return skip();
                  if (!((a * b) / b == a)) return failure("(a*b)/b != a for a=" + a.str() + ", b=" + b.str());
                  if (!((a + b).exact() && (a * b).exact())) return failure("exact arithmetic left Exact mode");
                  return pass();
                }});

  ps.push_back({"core.float_conversion", Kind::ForAll, [](Rng& g) {
                  std::uniform_int_distribution<std::int64_t> d(-(std::int64_t(1) << 40) + 1, (std::int64_t(1) << 40) - 1);
                  const std::int64_t p = d(g);
                  std::int64_t q = 0;
                  while (q == 0) q = d(g);
                  const double direct = static_cast<double>(p) / static_cast<double>(q);
                  const double conv = to_double(R(p) / R(q));
                  const double ulp = std::abs(std::nextafter(direct, std::numeric_limits<double>::infinity()) - direct);
                  if (std::abs(conv - direct) > ulp)
                    return failure(std::to_string(p) + "/" + std::to_string(q) + ": " + shortest(conv) + " vs " + shortest(direct));
                  return pass();
                }});

  ps.push_back({"core.ln_mode", Kind::ForAll, [](Rng& g) {
                  const R r = gen_rational(g, 1000);
                  const Scalar s(r);
                  if (r <= 0) {
                    try {
                      (void)scalar_ln(s);
                    } catch (const Error& e) {
                      if (e.kind() == ErrorKind::NonPositiveLog) return pass();
                    }
                    return failure("ln of non-positive " + s.str() + " did not raise NonPositiveLog");
                  }
                  const Scalar l = scalar_ln(s);
                  if (l.exact()) return failure("ln stayed Exact");
                  if (!close(std::exp(l.as_double()), to_double(r), 1e-12)) return failure("exp(ln x) != x for " + s.str());
                  return pass();
                }});
  return ps;
}

std::vector<Property> multiset_props() {
  std::vector<Property> ps;

  ps.push_back({"multiset.acc_size_and_permutation", Kind::ForAll, [](Rng& g) {
                  const SampleSpace s = gen_space(g);
                  std::vector<std::string> seq;
                  const auto n = uniform_int(g, 0, 10);
                  for (std::uint64_t k = 0; k < n; ++k) seq.push_back(s.label(uniform_int(g, 0, s.size() - 1)));
                  const Multiset a = acc(seq, s);
                  if (a.size() != seq.size()) return failure("size " + std::to_string(a.size()) + " for length " + std::to_string(seq.size()));
                  std::shuffle(seq.begin(), seq.end(), g);
                  if (!(acc(seq, s) == a)) return failure("acc changed under permutation: " + a.ket());
                  return pass();
                }});

  ps.push_back({"multiset.coefm_counts_sequences", Kind::ForAll, [](Rng& g) {
                  const SampleSpace s = gen_space(g, 1, 4);
                  const auto K = uniform_int(g, 0, 5);
                  const Multiset phi = gen_multiset(g, s, K);
                  std::uint64_t total = 1;
                  for (std::uint64_t k = 0; k < K; ++k) total *= s.size();
                  std::uint64_t hits = 0;
                  std::vector<std::size_t> seq(K);
                  for (std::uint64_t code = 0; code < total; ++code) {
                    std::uint64_t c = code;
                    for (auto& x : seq) {
                      x = c % s.size();
                      c /= s.size();
                    }
                    if (acc_indices(seq, s) == phi) ++hits;
                  }
                  if (Integer(hits) != coefm(phi))
                    return failure(phi.ket() + ": " + std::to_string(hits) + " sequences, coefm " + coefm(phi).str());
                  return pass();
                }});

  ps.push_back({"multiset.flrn_scaling", Kind::ForAll, [](Rng& g) {
                  const SampleSpace s = gen_space(g);
                  const Multiset phi = gen_multiset(g, s, uniform_int(g, 1, 8));
                  const auto n = uniform_int(g, 1, 7);
                  return expect_equal(flrn(phi.scaled(n)), flrn(phi), "flrn(" + std::to_string(n) + "*" + phi.ket() + ")");
                }});

  ps.push_back({"multiset.multinomial_theorem", Kind::ForAll, [](Rng& g) {
                  const SampleSpace s = gen_space(g, 1, 4);
                  const auto K = uniform_int(g, 0, 5);
                  std::vector<R> r;
                  R sum(0);
                  for (std::size_t i = 0; i < s.size(); ++i) {
                    r.push_back(gen_rational(g, 20));
                    sum += r.back();
                  }
                  R rhs(0);
                  for (const auto& phi : enumerate_multisets(s, K)) {
                    R term{coefm(phi)};
                    for (std::size_t i = 0; i < s.size(); ++i) term *= ipow(r[i], phi(i));
                    rhs += term;
                  }
                  return expect_equal(ipow(sum, K), rhs, "(sum r)^" + std::to_string(K));
                }});

  ps.push_back({"multiset.enumeration_count", Kind::ForAll, [](Rng& g) {
                  const SampleSpace s = gen_space(g);
                  const auto K = uniform_int(g, 0, 6);
                  const auto all = enumerate_multisets(s, K);
                  R binom(1);
                  for (std::uint64_t k = 1; k <= K; ++k) binom = binom * R(s.size() - 1 + k) / R(k);
                  if (R(all.size()) != binom) return failure("count " + std::to_string(all.size()) + " != " + to_string(binom));
                  for (std::size_t i = 0; i < all.size(); ++i) {
                    if (all[i].size() != K) return failure("wrong size: " + all[i].ket());
                    if (i && !(all[i - 1].counts() > all[i].counts())) return failure("order broken at " + all[i].ket());
                  }
                  return pass();
                }});
  return ps;
}

}  // namespace

void add_core(Suites& s) {
  s.emplace_back("core", core_props());
  s.emplace_back("multiset", multiset_props());
}

}  // namespace wiser::checks::detail
