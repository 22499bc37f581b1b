#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "wiser/channel.hpp"
#include "wiser/checks.hpp"
#include "wiser/wiser.hpp"

namespace wiser::checks {

using R = Rational;

inline std::uint64_t uniform_int(Rng& g, std::uint64_t lo, std::uint64_t hi) {
  return std::uniform_int_distribution<std::uint64_t>(lo, hi)(g);
}

inline bool coin(Rng& g) { return uniform_int(g, 0, 1) == 1; }

inline SampleSpace space_of(std::size_t n) {
  static const std::vector<SampleSpace> cache = [] {
    std::vector<SampleSpace> v;
    for (std::size_t k = 0; k <= 8; ++k) {
      std::vector<std::string> labels;
      for (std::size_t i = 0; i < k; ++i) labels.push_back("x" + std::to_string(i));
      v.emplace_back(labels);
    }
    return v;
  }();
  return cache.at(n);
}

inline SampleSpace gen_space(Rng& g, std::size_t lo = 1, std::size_t hi = 6) {
  return space_of(uniform_int(g, lo, hi));
}

/// k/d with d in 1..10 and k in lo*d..d.
inline R gen_prob(Rng& g, bool positive = false) {
  const auto d = uniform_int(g, 1, 10);
  return R(uniform_int(g, positive ? 1 : 0, d), d);
}

inline R gen_rational(Rng& g, std::int64_t range = 1'000'000) {
  std::uniform_int_distribution<std::int64_t> num(-range, range);
  std::uniform_int_distribution<std::int64_t> den(1, range);
  return R(num(g), den(g));
}

/// Integer weights normalised; full support when requested.
inline Dist<R> gen_dist(Rng& g, const SampleSpace& s, bool full = false) {
  Vec<R> w(static_cast<Eigen::Index>(s.size()));
  R total(0);
  do {
    total = 0;
    for (Eigen::Index i = 0; i < w.size(); ++i) {
      w[i] = R(uniform_int(g, full ? 1 : 0, 6));
      total += w[i];
    }
  } while (total == 0);
  return Dist<R>(s, w / total);
}

inline Dist<R> gen_dirac(Rng& g, const SampleSpace& s) { return dirac(s, s.label(uniform_int(g, 0, s.size() - 1))); }

inline Factor<R> gen_pred(Rng& g, const SampleSpace& s, bool positive = false) {
  Vec<R> v(static_cast<Eigen::Index>(s.size()));
  for (Eigen::Index i = 0; i < v.size(); ++i) v[i] = gen_prob(g, positive);
  return Factor<R>(s, v);
}

/// Values in [0, 2], so not necessarily a predicate.
inline Factor<R> gen_factor(Rng& g, const SampleSpace& s, bool positive = false) {
  Vec<R> v(static_cast<Eigen::Index>(s.size()));
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const auto d = uniform_int(g, 1, 6);
    v[i] = R(uniform_int(g, positive ? 1 : 0, 2 * d), d);
  }
  return Factor<R>(s, v);
}

struct EvidenceOptions {
  std::uint64_t min_size = 1;
  std::uint64_t max_size = 6;
  std::size_t max_distinct = 3;
  bool positive = true;
  bool predicates = true;
};

inline Evidence<R> gen_evidence(Rng& g, const SampleSpace& s, EvidenceOptions o = {}) {
  const auto K = uniform_int(g, o.min_size, o.max_size);
  const auto m = uniform_int(g, 1, std::min<std::uint64_t>(o.max_distinct, K));
  std::vector<Factor<R>> pool;
  for (std::size_t k = 0; k < m; ++k)
    pool.push_back(o.predicates ? gen_pred(g, s, o.positive) : gen_factor(g, s, o.positive));
  Evidence<R> e(s);
  for (auto& p : pool) e.add(p, 1);
  for (std::uint64_t k = m; k < K; ++k) e.add(pool[uniform_int(g, 0, m - 1)], 1);
  return e;
}

inline Multiset gen_multiset(Rng& g, const SampleSpace& s, std::uint64_t K) {
  std::vector<std::size_t> seq;
  for (std::uint64_t k = 0; k < K; ++k) seq.push_back(uniform_int(g, 0, s.size() - 1));
  return acc_indices(seq, s);
}

inline Channel<R> gen_channel(Rng& g, const SampleSpace& dom, const SampleSpace& cod, bool full = false) {
  std::vector<Dist<R>> rows;
  for (std::size_t x = 0; x < dom.size(); ++x) rows.push_back(gen_dist(g, cod, full));
  return Channel<R>(dom, rows);
}

/// m factors summing pointwise to 1 (perfect) or at most 1.
inline std::vector<Factor<R>> gen_matching(Rng& g, const SampleSpace& s, std::size_t m, bool perfect) {
  std::vector<Vec<R>> vals(m, Vec<R>(static_cast<Eigen::Index>(s.size())));
  for (Eigen::Index i = 0; i < static_cast<Eigen::Index>(s.size()); ++i) {
    std::vector<R> parts;
    R total(0);
    for (std::size_t k = 0; k < m + (perfect ? 0 : 1); ++k) {
      parts.emplace_back(uniform_int(g, 0, 5));
      total += parts.back();
    }
    if (total == 0) {
      parts[0] = 1;
      total = 1;
    }
    for (std::size_t k = 0; k < m; ++k) vals[k][i] = parts[k] / total;
  }
  std::vector<Factor<R>> out;
  for (auto& v : vals) out.emplace_back(s, v);
  return out;
}

inline Dist<double> gen_dist_double(Rng& g, const SampleSpace& s) {
  std::exponential_distribution<double> e(1.0);
  Vec<double> w(static_cast<Eigen::Index>(s.size()));
  for (Eigen::Index i = 0; i < w.size(); ++i) w[i] = e(g);
  return Dist<double>::normalized(s, w);
}

inline bool close(double a, double b, double tol = 1e-9) { return std::abs(a - b) <= tol * std::max(1.0, std::abs(b)); }

inline bool close(const Dist<double>& a, const Dist<double>& b, double tol = 1e-9) {
  return a.space() == b.space() && ((a.weights() - b.weights()).cwiseAbs().maxCoeff() <= tol);
}

template <class T>
std::string show(const Dist<T>& d) {
  return ket(d);
}

inline std::string show(const R& r) { return to_string(r); }

template <class T>
std::string show(const Factor<T>& p) {
  return table_text(p);
}

template <class T>
std::string show(const Evidence<T>& e) {
  std::string out;
  for (std::size_t k = 0; k < e.distinct(); ++k) {
    if (k) out += " + ";
    out += std::to_string(e.counts()[k]) + "|" + table_text(e.factors()[k]) + ">";
  }
  return out.empty() ? "0" : out;
}

inline std::string show(const Channel<R>& c) {
  std::string out;
  for (std::size_t x = 0; x < c.dom().size(); ++x) {
    if (x) out += "; ";
    out += c.dom().label(x) + " -> " + ket(c.row(x));
  }
  return out;
}

template <class T>
TrialResult expect_equal(const T& a, const T& b, const std::string& context) {
  if (a == b) return pass();
  return failure(context + ": " + show(a) + " != " + show(b));
}

}  // namespace wiser::checks
