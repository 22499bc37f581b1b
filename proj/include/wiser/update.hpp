#pragma once

#include <cmath>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "wiser/distribution.hpp"
#include "wiser/divergence.hpp"
#include "wiser/evidence.hpp"
#include "wiser/validity.hpp"

namespace wiser {

/// w|p = w(x) p(x) / (w |= p).
template <class T>
Dist<T> bayes_update(const Dist<T>& w, const Factor<T>& p) {
  const T v = validity(w, p);
  if (v == 0) fail(ErrorKind::ZeroValidity, "factor " + table_text(p) + " has zero validity");
  return Dist<T>(w.space(), w.weights().cwiseProduct(p.values()) / v);
}

namespace detail {

template <class T>
void require_factor_validities(const Dist<T>& w, const Evidence<T>& psi) {
  require_nonempty(psi);
  require_same(w.space(), psi.space(), "evidence on another space");
  for (std::size_t k = 0; k < psi.distinct(); ++k)
    if (validity(w, psi.factors()[k]) == 0)
      fail(ErrorKind::ZeroValidity,
           "evidence factor " + std::to_string(k + 1) + " " + table_text(psi.factors()[k]) + " has zero validity");
}

}  // namespace detail

/// sum_p Flrn(psi)(p) * w|p.
template <class T>
Dist<T> jeffrey_update(const Dist<T>& w, const Evidence<T>& psi) {
  detail::require_factor_validities(w, psi);
  const auto weights = psi.flrn_weights();
  Vec<T> out = Vec<T>::Zero(static_cast<Eigen::Index>(w.size()));
  for (std::size_t k = 0; k < psi.distinct(); ++k)
    out += scalar_cast<T>(weights[k]) * bayes_update(w, psi.factors()[k]).weights();
  return Dist<T>(w.space(), std::move(out));
}

/// Extension: Jeffrey update with arbitrary convex weights instead of Flrn(psi).
template <class T>
Dist<T> jeffrey_update_weighted(const Dist<T>& w, const std::vector<std::pair<Factor<T>, T>>& weighted) {
  std::vector<T> rs;
  std::vector<Dist<T>> ds;
  for (std::size_t k = 0; k < weighted.size(); ++k) {
    if (validity(w, weighted[k].first) == 0)
      fail(ErrorKind::ZeroValidity, "factor " + std::to_string(k + 1) + " has zero validity");
    rs.push_back(weighted[k].second);
    ds.push_back(bayes_update(w, weighted[k].first));
  }
  return convex_sum(rs, ds);
}

/// w | &psi.
template <class T>
Dist<T> pearl_update(const Dist<T>& w, const Evidence<T>& psi) {
  require_same(w.space(), psi.space(), "evidence on another space");
  const Factor<T> c = and_conj(psi);
  if (validity(w, c) == 0)
    fail(ErrorKind::ZeroValidity, "conjunction of the evidence has zero validity (inconsistent evidence)");
  return bayes_update(w, c);
}

/// w | &Flrn(psi), computed in double.
template <class T>
Dist<double> vfe_update(const Dist<T>& w, const Evidence<T>& psi) {
  detail::require_factor_validities(w, psi);
  const Dist<double> wd = w.template cast<double>();
  const Factor<double> q = frac_conj(psi);
  if (!(validity(wd, q) > 0.0))
    fail(ErrorKind::ZeroValidity, "fractional conjunction of the evidence has zero validity");
  return Dist<double>::normalized(w.space(), wd.weights().cwiseProduct(q.values()));
}

/// Flrn(sum_{x in supp w} exp(Flrn(psi) |= ln(w|-(x))) |x>).
template <class T>
Dist<double> vfe_update_softmax(const Dist<T>& w, const Evidence<T>& psi) {
  detail::require_factor_validities(w, psi);
  const auto weights = psi.flrn_weights();
  std::vector<Dist<double>> posts;
  for (const auto& p : psi.factors()) posts.push_back(bayes_update(w, p).template cast<double>());
  constexpr double ninf = -std::numeric_limits<double>::infinity();
  Vec<double> s = Vec<double>::Constant(static_cast<Eigen::Index>(w.size()), ninf);
  double top = ninf;
  for (auto x : w.support()) {
    double e = 0.0;
    for (std::size_t k = 0; k < posts.size() && e != ninf; ++k) {
      const double px = posts[k](x);
      e = px > 0.0 ? e + to_double(weights[k]) * std::log(px) : ninf;
    }
    s[static_cast<Eigen::Index>(x)] = e;
    top = std::max(top, e);
  }
  if (top == ninf) fail(ErrorKind::ZeroValidity, "every outcome is excluded by some factor");
  Vec<double> m(s.size());
  for (Eigen::Index i = 0; i < s.size(); ++i) m[i] = s[i] == ninf ? 0.0 : std::exp(s[i] - top);
  return Dist<double>::normalized(w.space(), std::move(m));
}

/// Flrn(psi) |= D_KL(r, w|-) = sum_p Flrn(psi)(p) D_KL(r, w|p).
template <class U, class T>
double free_energy_objective(const Dist<U>& r, const Dist<T>& w, const Evidence<T>& psi) {
  detail::require_factor_validities(w, psi);
  const auto weights = psi.flrn_weights();
  double total = 0.0;
  for (std::size_t k = 0; k < psi.distinct(); ++k) {
    const Dist<T> post = bayes_update(w, psi.factors()[k]);
    for (std::size_t i = 0; i < r.size(); ++i)
      if (r(i) != 0 && post(i) == 0)
        fail(ErrorKind::SupportMismatch, "support of rho includes " + r.space().label(i) + " outside w|p" + std::to_string(k + 1));
    total += to_double(weights[k]) * kl_divergence(r, post);
  }
  return total;
}

}  // namespace wiser
