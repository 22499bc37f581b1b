#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "wiser/distribution.hpp"
#include "wiser/evidence.hpp"

namespace wiser {

/// w |= p = sum_x w(x) p(x).
template <class T>
T validity(const Dist<T>& w, const Factor<T>& p) {
  require_same(w.space(), p.space(), "validity of a factor on another space");
  return w.weights().cwiseProduct(p.values()).sum();
}

/// coefm(psi) * prod_p (w |= p)^psi(p).
template <class T>
T jeffrey_validity(const Dist<T>& w, const Evidence<T>& psi) {
  require_nonempty(psi);
  require_same(w.space(), psi.space(), "evidence on another space");
  T v = scalar_cast<T>(Rational(coefm(psi)));
  for (std::size_t k = 0; k < psi.distinct(); ++k) v *= ipow(validity(w, psi.factors()[k]), psi.counts()[k]);
  return v;
}

/// coefm(psi) * (w |= &psi).
template <class T>
T pearl_validity(const Dist<T>& w, const Evidence<T>& psi) {
  require_nonempty(psi);
  require_same(w.space(), psi.space(), "evidence on another space");
  return scalar_cast<T>(Rational(coefm(psi))) * validity(w, and_conj(psi));
}

/// prod_i (w|p1..p(i-1) |= p_i); equals w |= p1 & ... & pn.
template <class T>
T iterated_pearl_validity(const Dist<T>& w, const std::vector<Factor<T>>& ps) {
  if (ps.empty()) fail(ErrorKind::EmptyEvidence, "no factors to iterate");
  T total(1);
  Vec<T> cur = w.weights();
  for (std::size_t i = 0; i < ps.size(); ++i) {
    require_same(w.space(), ps[i].space(), "iterated factor on another space");
    const T v = cur.cwiseProduct(ps[i].values()).sum();
    if (v == 0)
      fail(ErrorKind::ZeroValidity, "validity of factor " + std::to_string(i + 1) + " after updating with the first " +
                                        std::to_string(i) + " factor(s) is zero");
    total *= v;
    cur = cur.cwiseProduct(ps[i].values()) / v;
  }
  return total;
}

/// (w |= p1 & p2) - (w |= p1)(w |= p2).
template <class T>
T covariance(const Dist<T>& w, const Factor<T>& p1, const Factor<T>& p2) {
  return validity(w, conj(p1, p2)) - validity(w, p1) * validity(w, p2);
}

/// Flrn(psi) |= ln((w |= -)/(w' |= -)); its sign follows the order of the two
/// Jeffrey validities.
template <class T>
double log_likelihood_score(const Dist<T>& w, const Dist<T>& w2, const Evidence<T>& psi) {
  require_nonempty(psi);
  const auto weights = psi.flrn_weights();
  double score = 0.0;
  for (std::size_t k = 0; k < psi.distinct(); ++k) {
    const T a = validity(w, psi.factors()[k]);
    const T b = validity(w2, psi.factors()[k]);
    if (a == 0 || b == 0)
      fail(ErrorKind::ZeroValidity, "factor " + std::to_string(k + 1) + " has zero validity");
    score += to_double(weights[k]) * std::log(to_double(T(a / b)));
  }
  return score;
}

}  // namespace wiser
