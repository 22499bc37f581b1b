#pragma once

#include <string>
#include <vector>

#include "wiser/distribution.hpp"
#include "wiser/evidence.hpp"
#include "wiser/update.hpp"

namespace wiser {

/// Conditional probability table from dom to cod: a row-stochastic matrix
/// with one row per domain element.
template <class T>
class Channel {
 public:
  using Scalar = T;

  Channel(SampleSpace dom, SampleSpace cod, Mat<T> rows)
      : dom_(std::move(dom)), cod_(std::move(cod)), m_(std::move(rows)) {
    if (static_cast<std::size_t>(m_.rows()) != dom_.size() || static_cast<std::size_t>(m_.cols()) != cod_.size())
      fail(ErrorKind::SpaceMismatch, "channel matrix shape differs from its spaces");
    for (std::size_t x = 0; x < dom_.size(); ++x) {
      try {
        (void)row(x);
      } catch (const Error& e) {
        fail(e.kind(), "row " + dom_.label(x) + ": " + e.message());
      }
    }
  }

  Channel(const SampleSpace& dom, const std::vector<Dist<T>>& rows)
      : Channel(dom, rows.empty() ? SampleSpace() : rows.front().space(), stack(dom, rows)) {}

  const SampleSpace& dom() const { return dom_; }
  const SampleSpace& cod() const { return cod_; }
  const Mat<T>& matrix() const { return m_; }
  Dist<T> row(std::size_t x) const { return Dist<T>(cod_, m_.row(static_cast<Eigen::Index>(x)).transpose()); }
  Dist<T> operator()(std::string_view x) const { return row(dom_.index(x)); }

  template <class U>
  Channel<U> cast() const {
    std::vector<Dist<U>> rows;
    for (std::size_t x = 0; x < dom_.size(); ++x) rows.push_back(row(x).template cast<U>());
    return Channel<U>(dom_, rows);
  }

  friend bool operator==(const Channel& a, const Channel& b) {
    return a.dom_ == b.dom_ && a.cod_ == b.cod_ && a.m_ == b.m_;
  }

 private:
  static Mat<T> stack(const SampleSpace& dom, const std::vector<Dist<T>>& rows) {
    if (rows.size() != dom.size()) fail(ErrorKind::SpaceMismatch, "need one row per domain element");
    Mat<T> m(static_cast<Eigen::Index>(rows.size()), rows.empty() ? 0 : static_cast<Eigen::Index>(rows.front().size()));
    for (std::size_t x = 0; x < rows.size(); ++x) {
      require_same(rows[x].space(), rows.front().space(), "channel rows on different spaces");
      m.row(static_cast<Eigen::Index>(x)) = rows[x].weights().transpose();
    }
    return m;
  }

  SampleSpace dom_;
  SampleSpace cod_;
  Mat<T> m_;
};

template <class T = Rational>
Channel<T> identity_channel(const SampleSpace& space) {
  const auto n = static_cast<Eigen::Index>(space.size());
  return Channel<T>(space, space, Mat<T>::Identity(n, n));
}

template <class T>
Channel<T> constant_channel(const SampleSpace& dom, const Dist<T>& r) {
  return Channel<T>(dom, std::vector<Dist<T>>(dom.size(), r));
}

/// c >> w: y |-> sum_x w(x) c(x)(y).
template <class T>
Dist<T> push(const Channel<T>& c, const Dist<T>& w) {
  require_same(c.dom(), w.space(), "distribution is not on the channel domain");
  return Dist<T>(c.cod(), c.matrix().transpose() * w.weights());
}

/// c << q: x |-> sum_y c(x)(y) q(y).
template <class T>
Factor<T> pull(const Channel<T>& c, const Factor<T>& q) {
  require_same(c.cod(), q.space(), "factor is not on the channel codomain");
  return Factor<T>(c.dom(), c.matrix() * q.values());
}

/// c <<< psi: sum_q psi(q)|c << q>, merging factors that coincide after pulling.
template <class T>
Evidence<T> triple_pull(const Channel<T>& c, const Evidence<T>& psi) {
  require_same(c.cod(), psi.space(), "evidence is not on the channel codomain");
  Evidence<T> out(c.dom());
  for (std::size_t k = 0; k < psi.distinct(); ++k) out.add(pull(c, psi.factors()[k]), psi.counts()[k]);
  return out;
}

template <class T>
Evidence<T> triple_pull(const Channel<T>& c, const Multiset& phi) {
  return triple_pull(c, point_evidence<T>(phi));
}

/// c-dagger at w: y |-> w | (c << 1_y).
template <class T>
Channel<T> dagger(const Channel<T>& c, const Dist<T>& w) {
  require_same(c.dom(), w.space(), "distribution is not on the channel domain");
  std::vector<Dist<T>> rows;
  for (std::size_t y = 0; y < c.cod().size(); ++y) {
    const Factor<T> q = pull(c, point_pred<T>(c.cod(), y));
    if (validity(w, q) == 0)
      fail(ErrorKind::ZeroValidity, "predicted probability of " + c.cod().label(y) + " is zero");
    rows.push_back(bayes_update(w, q));
  }
  return Channel<T>(c.cod(), rows);
}

/// mn[K](c) = mn[K] o c, into Mlt[K](cod).
template <class T>
Channel<T> multinomial_channel(const Channel<T>& c, std::uint64_t K) {
  std::vector<Dist<T>> rows;
  for (std::size_t x = 0; x < c.dom().size(); ++x) rows.push_back(multinomial(K, c.row(x)));
  return Channel<T>(c.dom(), rows);
}

}  // namespace wiser
