#pragma once

#include <functional>
#include <string>
#include <vector>

#include "wiser/error.hpp"
#include "wiser/multiset.hpp"
#include "wiser/rational.hpp"
#include "wiser/sample_space.hpp"

namespace wiser {

/// Finite discrete distribution: non-negative weights over a space that sum to one
/// (exactly for Rational, within 1e-9 for double).
template <class T>
class Dist {
 public:
  using Scalar = T;

  Dist(SampleSpace space, Vec<T> weights) : space_(std::move(space)), w_(std::move(weights)) {
    if (static_cast<std::size_t>(w_.size()) != space_.size())
      fail(ErrorKind::SpaceMismatch, "weight count differs from space size");
    T total(0);
    for (Eigen::Index i = 0; i < w_.size(); ++i) {
      if (w_[i] < 0) fail(ErrorKind::NotADistribution, "negative weight at " + space_.label(i));
      total += w_[i];
    }
    if (!scalar_traits<T>::is_one(total))
      fail(ErrorKind::NotADistribution, "weights sum to " + scalar_text(total));
  }

  /// Divides by the total; ZeroValidity when the total is zero.
  static Dist normalized(SampleSpace space, Vec<T> mass) {
    const T total = mass.sum();
    if (scalar_traits<T>::is_zero(total)) fail(ErrorKind::ZeroValidity, "cannot normalise zero mass");
    mass /= total;
    if constexpr (!scalar_traits<T>::exact) {
      for (Eigen::Index i = 0; i < mass.size(); ++i)
        if (mass[i] < 0) fail(ErrorKind::NotADistribution, "negative mass");
    }
    return Dist(std::move(space), std::move(mass));
  }

  const SampleSpace& space() const { return space_; }
  const Vec<T>& weights() const { return w_; }
  std::size_t size() const { return space_.size(); }
  const T& operator()(std::size_t i) const { return w_[static_cast<Eigen::Index>(i)]; }
  const T& operator[](std::string_view label) const { return w_[static_cast<Eigen::Index>(space_.index(label))]; }

  std::vector<std::size_t> support() const {
    std::vector<std::size_t> s;
    for (Eigen::Index i = 0; i < w_.size(); ++i)
      if (w_[i] > 0) s.push_back(static_cast<std::size_t>(i));
    return s;
  }

  bool is_dirac() const { return support().size() == 1; }

  template <class U>
  Dist<U> cast() const {
    if constexpr (std::is_same_v<U, T>) {
      return *this;
    } else {
      Vec<U> v = vec_cast<U>(w_);
      if constexpr (std::is_same_v<U, double>) {
        return Dist<U>::normalized(space_, std::move(v));
      } else {
        return Dist<U>(space_, std::move(v));
      }
    }
  }

 private:
  SampleSpace space_;
  Vec<T> w_;
};

/// Pointwise comparison on the union of both spaces, missing labels counting as 0.
template <class T>
bool operator==(const Dist<T>& a, const Dist<T>& b) {
  if (a.space() == b.space()) return a.weights() == b.weights();
  for (std::size_t i = 0; i < a.size(); ++i) {
    const auto& l = a.space().label(i);
    const T other = b.space().contains(l) ? b[l] : T(0);
    if (a(i) != other) return false;
  }
  for (std::size_t i = 0; i < b.size(); ++i)
    if (!a.space().contains(b.space().label(i)) && b(i) != 0) return false;
  return true;
}

/// "1/2|R> + 1/5|B>", zero weights omitted.
template <class V>
std::string ket_text(const SampleSpace& space, const V& values) {
  std::string out;
  for (std::size_t i = 0; i < space.size(); ++i) {
    const auto& v = values[static_cast<Eigen::Index>(i)];
    if (v == 0) continue;
    if (!out.empty()) out += " + ";
    out += scalar_text(v) + "|" + space.label(i) + ">";
  }
  return out.empty() ? "0" : out;
}

template <class T>
std::string ket(const Dist<T>& d) {
  return ket_text(d.space(), d.weights());
}

template <class T = Rational>
Dist<T> dirac(const SampleSpace& space, std::string_view x) {
  Vec<T> w = Vec<T>::Zero(static_cast<Eigen::Index>(space.size()));
  w[static_cast<Eigen::Index>(space.index(x))] = T(1);
  return Dist<T>(space, std::move(w));
}

template <class T = Rational>
Dist<T> uniform(const SampleSpace& space) {
  if (space.size() == 0) fail(ErrorKind::NotADistribution, "uniform over empty space");
  Vec<T> w = Vec<T>::Constant(static_cast<Eigen::Index>(space.size()), T(1) / T(space.size()));
  return Dist<T>(space, std::move(w));
}

template <class T>
Dist<T> convex_sum(const std::vector<T>& weights, const std::vector<Dist<T>>& dists) {
  if (weights.size() != dists.size() || dists.empty())
    fail(ErrorKind::WeightsNotConvex, "need one weight per distribution");
  T total(0);
  for (const auto& r : weights) {
    if (r < 0) fail(ErrorKind::WeightsNotConvex, "negative weight " + scalar_text(r));
    total += r;
  }
  if (!scalar_traits<T>::is_one(total)) fail(ErrorKind::WeightsNotConvex, "weights sum to " + scalar_text(total));
  Vec<T> w = Vec<T>::Zero(static_cast<Eigen::Index>(dists.front().size()));
  for (std::size_t i = 0; i < dists.size(); ++i) {
    require_same(dists[i].space(), dists.front().space(), "convex_sum over different spaces");
    w += weights[i] * dists[i].weights();
  }
  return Dist<T>(dists.front().space(), std::move(w));
}

template <class T>
Dist<T> tensor(const std::vector<Dist<T>>& parts) {
  std::vector<SampleSpace> comps;
  for (const auto& p : parts) comps.push_back(p.space());
  SampleSpace prod = SampleSpace::product(comps);
  Vec<T> w(static_cast<Eigen::Index>(prod.size()));
  for (std::size_t k = 0; k < prod.size(); ++k) {
    const auto coords = prod.unflatten(k);
    T v(1);
    for (std::size_t c = 0; c < parts.size(); ++c) v *= parts[c](coords[c]);
    w[static_cast<Eigen::Index>(k)] = v;
  }
  return Dist<T>(prod, std::move(w));
}

template <class T>
Dist<T> tensor(const Dist<T>& a, const Dist<T>& b) {
  return tensor<T>({a, b});
}

template <class T>
Dist<T> tensor_power(const Dist<T>& a, std::size_t n) {
  return tensor(std::vector<Dist<T>>(n, a));
}

/// D(f): pushes weight along an index map into `target`, merging by addition.
template <class T>
Dist<T> push_function(const Dist<T>& d, const SampleSpace& target,
                      const std::function<std::size_t(std::size_t)>& f) {
  Vec<T> w = Vec<T>::Zero(static_cast<Eigen::Index>(target.size()));
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d(i) == 0) continue;
    const std::size_t j = f(i);
    if (j >= target.size()) fail(ErrorKind::UnknownElement, "function leaves the target space");
    w[static_cast<Eigen::Index>(j)] += d(i);
  }
  return Dist<T>(target, std::move(w));
}

template <class T>
Dist<T> push_labels(const Dist<T>& d, const SampleSpace& target,
                    const std::function<std::string(const std::string&)>& f) {
  return push_function<T>(d, target, [&](std::size_t i) { return target.index(f(d.space().label(i))); });
}

/// D(pi_k) on a product space.
template <class T>
Dist<T> marginal(const Dist<T>& d, std::size_t k) {
  const auto& comps = d.space().components();
  if (k >= comps.size()) fail(ErrorKind::SpaceMismatch, "marginal of a non-product component");
  return push_function<T>(d, comps[k], [&](std::size_t i) { return d.space().unflatten(i)[k]; });
}

/// D(Delta): x |-> (x,x).
template <class T>
Dist<T> copy(const Dist<T>& d) {
  SampleSpace prod = SampleSpace::power(d.space(), 2);
  return push_function<T>(d, prod, [&](std::size_t i) { return prod.flatten({i, i}); });
}

/// mn[K](w)(phi) = coefm(phi) * prod w(x)^phi(x), over multiset_space(space, K).
template <class T>
Dist<T> multinomial(std::uint64_t K, const Dist<T>& d) {
  const auto draws = enumerate_multisets(d.space(), K);
  SampleSpace mspace = multiset_space(d.space(), K);
  Vec<T> w(static_cast<Eigen::Index>(draws.size()));
  for (std::size_t k = 0; k < draws.size(); ++k) {
    T v = scalar_cast<T>(Rational(coefm(draws[k])));
    for (std::size_t x = 0; x < d.size(); ++x) v *= ipow(d(x), draws[k](x));
    w[static_cast<Eigen::Index>(k)] = v;
  }
  return Dist<T>(mspace, std::move(w));
}

}  // namespace wiser
