#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace wiser {

inline constexpr std::size_t max_space_size = 1'000'000;

/// Ordered set of distinct labels. Product spaces remember their components
/// and enumerate tuples lexicographically, last component fastest.
class SampleSpace {
 public:
  SampleSpace();
  explicit SampleSpace(std::vector<std::string> labels);
  SampleSpace(std::initializer_list<std::string> labels);

  static SampleSpace product(const std::vector<SampleSpace>& components);
  static SampleSpace power(const SampleSpace& base, std::size_t n);

  std::size_t size() const;
  const std::string& label(std::size_t i) const;
  const std::vector<std::string>& labels() const;
  std::size_t index(std::string_view label) const;
  bool contains(std::string_view label) const;

  bool is_product() const;
  const std::vector<SampleSpace>& components() const;
  std::vector<std::size_t> unflatten(std::size_t i) const;
  std::size_t flatten(const std::vector<std::size_t>& coords) const;

  /// Same labels in the same order.
  friend bool operator==(const SampleSpace& a, const SampleSpace& b);

  struct Impl;

 private:
  std::shared_ptr<const Impl> impl_;
};

void require_same(const SampleSpace& a, const SampleSpace& b, std::string_view what);

}  // namespace wiser
