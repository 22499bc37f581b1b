#include "wiser/multiset.hpp"

#include "wiser/distribution.hpp"
#include "wiser/error.hpp"

namespace wiser {

Multiset::Multiset(SampleSpace space) : space_(std::move(space)), counts_(space_.size(), 0) {}

Multiset::Multiset(SampleSpace space, std::vector<std::uint64_t> counts)
    : space_(std::move(space)), counts_(std::move(counts)) {
  if (counts_.size() != space_.size()) fail(ErrorKind::SpaceMismatch, "count vector length differs from space size");
}

Multiset::Multiset(SampleSpace space, const std::vector<std::pair<std::string, std::uint64_t>>& kets)
    : Multiset(std::move(space)) {
  for (const auto& [label, n] : kets) counts_[space_.index(label)] += n;
}

std::uint64_t Multiset::size() const {
  std::uint64_t n = 0;
  for (auto c : counts_) n += c;
  return n;
}

std::vector<std::size_t> Multiset::support() const {
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < counts_.size(); ++i)
    if (counts_[i]) s.push_back(i);
  return s;
}

Multiset Multiset::operator+(const Multiset& other) const {
  require_same(space_, other.space_, "sum of multisets over different spaces");
  Multiset out = *this;
  for (std::size_t i = 0; i < counts_.size(); ++i) out.counts_[i] += other.counts_[i];
  return out;
}

Multiset Multiset::scaled(std::uint64_t n) const {
  Multiset out = *this;
  for (auto& c : out.counts_) c *= n;
  return out;
}

std::string Multiset::ket() const {
  std::string out;
  for (std::size_t i = 0; i < counts_.size(); ++i) {
    if (!counts_[i]) continue;
    if (!out.empty()) out += " + ";
    out += std::to_string(counts_[i]) + "|" + space_.label(i) + ">";
  }
  return out.empty() ? "0" : out;
}

bool operator==(const Multiset& a, const Multiset& b) {
  return a.space_ == b.space_ && a.counts_ == b.counts_;
}

Multiset acc(const std::vector<std::string>& seq, const SampleSpace& space) {
  std::vector<std::uint64_t> counts(space.size(), 0);
  for (const auto& x : seq) ++counts[space.index(x)];
  return Multiset(space, std::move(counts));
}

Multiset acc_indices(const std::vector<std::size_t>& seq, const SampleSpace& space) {
  std::vector<std::uint64_t> counts(space.size(), 0);
  for (auto i : seq) {
    if (i >= space.size()) fail(ErrorKind::UnknownElement, "index " + std::to_string(i));
    ++counts[i];
  }
  return Multiset(space, std::move(counts));
}

Dist<Rational> flrn(const Multiset& phi) {
  const std::uint64_t n = phi.size();
  if (n == 0) fail(ErrorKind::EmptyMultiset, "frequentist learning of the empty multiset");
  Vec<Rational> w(static_cast<Eigen::Index>(phi.space().size()));
  for (std::size_t i = 0; i < phi.space().size(); ++i) w[static_cast<Eigen::Index>(i)] = Rational(phi(i), n);
  return Dist<Rational>(phi.space(), std::move(w));
}

Integer coefm(const std::vector<std::uint64_t>& counts) {
  std::uint64_t n = 0;
  for (auto c : counts) n += c;
  Integer r = factorial(n);
  for (auto c : counts) r /= factorial(c);
  return r;
}

Integer coefm(const Multiset& phi) { return coefm(phi.counts()); }

std::vector<Multiset> enumerate_multisets(const SampleSpace& space, std::uint64_t K) {
  std::vector<Multiset> out;
  const std::size_t n = space.size();
  if (n == 0) {
    if (K == 0) out.emplace_back(space);
    return out;
  }
  Integer total(1);
  for (std::uint64_t k = 1; k <= K; ++k) total = total * (n - 1 + k) / k;
  if (total > max_space_size) fail(ErrorKind::SizeLimit, "Mlt[" + std::to_string(K) + "] has " + total.str() + " elements");
  out.reserve(static_cast<std::size_t>(total));
  std::vector<std::uint64_t> counts(n, 0);
  // Recursive descent: the first coordinate takes K, K-1, ..., 0.
  std::function<void(std::size_t, std::uint64_t)> rec = [&](std::size_t pos, std::uint64_t left) {
    if (pos + 1 == n) {
      counts[pos] = left;
      out.emplace_back(space, counts);
      return;
    }
    for (std::uint64_t c = left + 1; c-- > 0;) {
      counts[pos] = c;
      rec(pos + 1, left - c);
    }
  };
  rec(0, K);
  return out;
}

SampleSpace multiset_space(const SampleSpace& space, std::uint64_t K) {
  std::vector<std::string> labels;
  for (const auto& m : enumerate_multisets(space, K)) labels.push_back(m.ket());
  return SampleSpace(std::move(labels));
}

}  // namespace wiser
