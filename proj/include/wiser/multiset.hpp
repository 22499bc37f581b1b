#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "wiser/rational.hpp"
#include "wiser/sample_space.hpp"

namespace wiser {

template <class T>
class Dist;

/// Natural-number multiset over a sample space, stored as a count per element.
class Multiset {
 public:
  explicit Multiset(SampleSpace space);
  Multiset(SampleSpace space, std::vector<std::uint64_t> counts);
  Multiset(SampleSpace space, const std::vector<std::pair<std::string, std::uint64_t>>& kets);

  const SampleSpace& space() const { return space_; }
  const std::vector<std::uint64_t>& counts() const { return counts_; }
  std::uint64_t operator()(std::size_t i) const { return counts_.at(i); }
  std::uint64_t operator[](std::string_view label) const { return counts_[space_.index(label)]; }

  /// The norm ||phi||.
  std::uint64_t size() const;
  std::vector<std::size_t> support() const;

  Multiset operator+(const Multiset& other) const;
  Multiset scaled(std::uint64_t n) const;

  /// "3|a> + 2|b>", zero counts omitted, "0" when empty.
  std::string ket() const;

  friend bool operator==(const Multiset& a, const Multiset& b);

 private:
  SampleSpace space_;
  std::vector<std::uint64_t> counts_;
};

Multiset acc(const std::vector<std::string>& seq, const SampleSpace& space);
Multiset acc_indices(const std::vector<std::size_t>& seq, const SampleSpace& space);

/// x -> phi(x)/||phi||.
Dist<Rational> flrn(const Multiset& phi);

/// ||phi||! / prod phi(x)!.
Integer coefm(const Multiset& phi);
Integer coefm(const std::vector<std::uint64_t>& counts);

/// Every multiset of size K, count vectors in descending lexicographic order,
/// so that K|x0> comes first and K|x_last> last.
std::vector<Multiset> enumerate_multisets(const SampleSpace& space, std::uint64_t K);

/// The space Mlt[K](X) whose labels are the kets of enumerate_multisets.
SampleSpace multiset_space(const SampleSpace& space, std::uint64_t K);

}  // namespace wiser
