#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "wiser/distribution.hpp"
#include "wiser/error.hpp"
#include "wiser/multiset.hpp"
#include "wiser/rational.hpp"
#include "wiser/sample_space.hpp"

namespace wiser {

/// Non-negative function on a sample space. A predicate when bounded by one,
/// sharp when every value is 0 or 1.
template <class T>
class Factor {
 public:
  using Scalar = T;

  Factor(SampleSpace space, Vec<T> values) : space_(std::move(space)), v_(std::move(values)) {
    if (static_cast<std::size_t>(v_.size()) != space_.size())
      fail(ErrorKind::SpaceMismatch, "value count differs from space size");
    for (Eigen::Index i = 0; i < v_.size(); ++i)
      if (v_[i] < 0) fail(ErrorKind::NegativeValue, "factor value at " + space_.label(i) + " is negative");
  }

  const SampleSpace& space() const { return space_; }
  const Vec<T>& values() const { return v_; }
  std::size_t size() const { return space_.size(); }
  const T& operator()(std::size_t i) const { return v_[static_cast<Eigen::Index>(i)]; }
  const T& operator[](std::string_view label) const { return v_[static_cast<Eigen::Index>(space_.index(label))]; }

  bool is_predicate() const { return (v_.array() <= T(1)).all(); }
  bool is_sharp() const {
    for (Eigen::Index i = 0; i < v_.size(); ++i)
      if (v_[i] != 0 && v_[i] != 1) return false;
    return true;
  }

  template <class U>
  Factor<U> cast() const {
    return Factor<U>(space_, vec_cast<U>(v_));
  }

  friend bool operator==(const Factor& a, const Factor& b) {
    return a.space_ == b.space_ && a.v_ == b.v_;
  }

 private:
  SampleSpace space_;
  Vec<T> v_;
};

/// "x: 9/10, y: 2/5"
template <class T>
std::string table_text(const Factor<T>& p) {
  std::string out = "{";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += ", ";
    out += p.space().label(i) + ": " + scalar_text(p(i));
  }
  return out + "}";
}

template <class T = Rational>
Factor<T> truth(const SampleSpace& space) {
  return Factor<T>(space, Vec<T>::Constant(static_cast<Eigen::Index>(space.size()), T(1)));
}

template <class T = Rational>
Factor<T> falsity(const SampleSpace& space) {
  return Factor<T>(space, Vec<T>::Zero(static_cast<Eigen::Index>(space.size())));
}

template <class T = Rational>
Factor<T> indicator(const SampleSpace& space, const std::vector<std::string>& subset) {
  Vec<T> v = Vec<T>::Zero(static_cast<Eigen::Index>(space.size()));
  for (const auto& x : subset) v[static_cast<Eigen::Index>(space.index(x))] = T(1);
  return Factor<T>(space, std::move(v));
}

template <class T = Rational>
Factor<T> point_pred(const SampleSpace& space, std::string_view x) {
  return indicator<T>(space, {std::string(x)});
}

template <class T = Rational>
Factor<T> point_pred(const SampleSpace& space, std::size_t i) {
  return point_pred<T>(space, space.label(i));
}

/// p & q, pointwise product.
template <class T>
Factor<T> conj(const Factor<T>& p, const Factor<T>& q) {
  require_same(p.space(), q.space(), "conjunction of factors on different spaces");
  return Factor<T>(p.space(), p.values().cwiseProduct(q.values()));
}

template <class T>
Factor<T> operator&(const Factor<T>& p, const Factor<T>& q) {
  return conj(p, q);
}

template <class T>
Factor<T> add(const Factor<T>& p, const Factor<T>& q) {
  require_same(p.space(), q.space(), "sum of factors on different spaces");
  return Factor<T>(p.space(), p.values() + q.values());
}

template <class T>
Factor<T> operator+(const Factor<T>& p, const Factor<T>& q) {
  return add(p, q);
}

template <class T>
Factor<T> scale(const T& s, const Factor<T>& p) {
  if (s < 0) fail(ErrorKind::NegativeValue, "negative scalar " + scalar_text(s));
  return Factor<T>(p.space(), s * p.values());
}

/// p-perp = 1 - p, defined for predicates only.
template <class T>
Factor<T> ortho(const Factor<T>& p) {
  if (!p.is_predicate()) fail(ErrorKind::NotAPredicate, "orthosupplement of " + table_text(p));
  return Factor<T>(p.space(), Vec<T>::Constant(p.values().size(), T(1)) - p.values());
}

/// Parallel conjunction on the product space: (p (x) q)(x,y) = p(x) q(y).
template <class T>
Factor<T> tensor_factor(const std::vector<Factor<T>>& parts) {
  std::vector<SampleSpace> comps;
  for (const auto& p : parts) comps.push_back(p.space());
  SampleSpace prod = SampleSpace::product(comps);
  Vec<T> v(static_cast<Eigen::Index>(prod.size()));
  for (std::size_t k = 0; k < prod.size(); ++k) {
    const auto coords = prod.unflatten(k);
    T x(1);
    for (std::size_t c = 0; c < parts.size(); ++c) x *= parts[c](coords[c]);
    v[static_cast<Eigen::Index>(k)] = x;
  }
  return Factor<T>(prod, std::move(v));
}

template <class T>
Factor<T> tensor_factor(const Factor<T>& p, const Factor<T>& q) {
  return tensor_factor<T>({p, q});
}

enum class MatchStatus { NoMatch, Match, PerfectMatch };

std::string_view to_string(MatchStatus m);

/// Multiset of factors. Factors are keyed by pointwise equality and kept in
/// first-insertion order; zero multiplicities are dropped.
template <class T>
class Evidence {
 public:
  using Scalar = T;
  using Entry = std::pair<Factor<T>, std::uint64_t>;

  explicit Evidence(SampleSpace space) : space_(std::move(space)) {}

  Evidence(SampleSpace space, const std::vector<Entry>& entries) : space_(std::move(space)) {
    for (const auto& [f, n] : entries) add(f, n);
  }

  /// Space taken from the first factor.
  Evidence(const std::vector<Entry>& entries)
      : space_(entries.empty() ? SampleSpace() : entries.front().first.space()) {
    for (const auto& [f, n] : entries) add(f, n);
  }

  const SampleSpace& space() const { return space_; }
  const std::vector<Factor<T>>& factors() const { return factors_; }
  const std::vector<std::uint64_t>& counts() const { return counts_; }
  std::size_t distinct() const { return factors_.size(); }
  bool empty() const { return factors_.empty(); }

  std::uint64_t size() const {
    std::uint64_t n = 0;
    for (auto c : counts_) n += c;
    return n;
  }

  std::uint64_t count(const Factor<T>& f) const {
    for (std::size_t i = 0; i < factors_.size(); ++i)
      if (factors_[i] == f) return counts_[i];
    return 0;
  }

  Evidence operator+(const Evidence& other) const {
    Evidence out = *this;
    for (std::size_t i = 0; i < other.factors_.size(); ++i) out.add(other.factors_[i], other.counts_[i]);
    return out;
  }

  Evidence scaled(std::uint64_t n) const {
    Evidence out(space_);
    for (std::size_t i = 0; i < factors_.size(); ++i) out.add(factors_[i], counts_[i] * n);
    return out;
  }

  /// Flrn(psi) as weights aligned with factors().
  std::vector<Rational> flrn_weights() const {
    const std::uint64_t n = size();
    if (n == 0) fail(ErrorKind::EmptyEvidence, "frequentist learning of empty evidence");
    std::vector<Rational> w;
    for (auto c : counts_) w.emplace_back(c, n);
    return w;
  }

  template <class U>
  Evidence<U> cast() const {
    Evidence<U> out(space_);
    for (std::size_t i = 0; i < factors_.size(); ++i) out.add(factors_[i].template cast<U>(), counts_[i]);
    return out;
  }

  friend bool operator==(const Evidence& a, const Evidence& b) {
    if (a.factors_.size() != b.factors_.size()) return false;
    for (std::size_t i = 0; i < a.factors_.size(); ++i)
      if (b.count(a.factors_[i]) != a.counts_[i]) return false;
    return true;
  }

  void add(const Factor<T>& f, std::uint64_t n) {
    if (n == 0) return;
    require_same(space_, f.space(), "evidence factors must share one space");
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      if (factors_[i] == f) {
        counts_[i] += n;
        return;
      }
    }
    factors_.push_back(f);
    counts_.push_back(n);
  }

 private:
  SampleSpace space_;
  std::vector<Factor<T>> factors_;
  std::vector<std::uint64_t> counts_;
};

template <class T>
Integer coefm(const Evidence<T>& psi) {
  return coefm(psi.counts());
}

/// Point evidence sum_x phi(x)|1_x>.
template <class T = Rational>
Evidence<T> point_evidence(const Multiset& phi) {
  Evidence<T> out(phi.space());
  for (auto i : phi.support()) out.add(point_pred<T>(phi.space(), i), phi(i));
  return out;
}

template <class T>
void require_nonempty(const Evidence<T>& psi) {
  if (psi.empty()) fail(ErrorKind::EmptyEvidence, "evidence has no factors");
}

/// &psi = prod_p p^psi(p), pointwise.
template <class T>
Factor<T> and_conj(const Evidence<T>& psi) {
  require_nonempty(psi);
  Vec<T> v = Vec<T>::Constant(static_cast<Eigen::Index>(psi.space().size()), T(1));
  for (std::size_t k = 0; k < psi.distinct(); ++k)
    for (Eigen::Index i = 0; i < v.size(); ++i) v[i] *= ipow(psi.factors()[k].values()[i], psi.counts()[k]);
  return Factor<T>(psi.space(), std::move(v));
}

/// (x)psi on X^K, each factor repeated by its multiplicity in evidence order.
template <class T>
Factor<T> tensor_conj(const Evidence<T>& psi) {
  require_nonempty(psi);
  std::vector<Factor<T>> parts;
  for (std::size_t k = 0; k < psi.distinct(); ++k)
    for (std::uint64_t r = 0; r < psi.counts()[k]; ++r) parts.push_back(psi.factors()[k]);
  std::size_t n = 1;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (psi.space().size() != 0 && n > max_space_size / psi.space().size())
      fail(ErrorKind::SizeLimit, "tensor conjunction of " + std::to_string(parts.size()) + " factors");
    n *= psi.space().size();
  }
  return tensor_factor(parts);
}

/// &Flrn(psi) = prod_p p^(psi(p)/K) in double, with 0^t = 0.
template <class T>
Factor<double> frac_conj(const Evidence<T>& psi) {
  require_nonempty(psi);
  const double K = static_cast<double>(psi.size());
  Vec<double> v = Vec<double>::Ones(static_cast<Eigen::Index>(psi.space().size()));
  for (std::size_t k = 0; k < psi.distinct(); ++k) {
    const double t = static_cast<double>(psi.counts()[k]) / K;
    for (Eigen::Index i = 0; i < v.size(); ++i) {
      const double x = to_double(psi.factors()[k].values()[i]);
      v[i] *= x == 0.0 ? 0.0 : std::pow(x, t);
    }
  }
  return Factor<double>(psi.space(), std::move(v));
}

/// Sum over the support only; multiplicities do not enter.
template <class T>
MatchStatus match_status(const Evidence<T>& psi) {
  Vec<T> total = Vec<T>::Zero(static_cast<Eigen::Index>(psi.space().size()));
  for (const auto& f : psi.factors()) total += f.values();
  bool perfect = true;
  for (Eigen::Index i = 0; i < total.size(); ++i) {
    if (total[i] > 1) return MatchStatus::NoMatch;
    if (total[i] != 1) perfect = false;
  }
  return perfect ? MatchStatus::PerfectMatch : MatchStatus::Match;
}

}  // namespace wiser
