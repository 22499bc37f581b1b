#include "wiser/sample_space.hpp"

#include <mutex>
#include <unordered_map>

#include "wiser/error.hpp"

namespace wiser {

struct SampleSpace::Impl {
  std::vector<std::string> labels;
  std::vector<SampleSpace> components;
  mutable std::once_flag indexed;
  mutable std::unordered_map<std::string_view, std::size_t> index;

  void build_index() const {
    std::call_once(indexed, [this] {
      index.reserve(labels.size());
      for (std::size_t i = 0; i < labels.size(); ++i) index.emplace(labels[i], i);
    });
  }
};

namespace {

std::shared_ptr<SampleSpace::Impl> make_checked(std::vector<std::string> labels) {
  if (labels.size() > max_space_size)
    fail(ErrorKind::SizeLimit, "space with " + std::to_string(labels.size()) + " elements");
  auto impl = std::make_shared<SampleSpace::Impl>();
  impl->labels = std::move(labels);
  impl->build_index();
  if (impl->index.size() != impl->labels.size()) {
    std::unordered_map<std::string_view, int> seen;
    for (const auto& l : impl->labels)
      if (++seen[l] > 1) fail(ErrorKind::DuplicateElement, "label \"" + l + "\" occurs twice");
  }
  return impl;
}

}  // namespace

SampleSpace::SampleSpace() : impl_(make_checked({})) {}

SampleSpace::SampleSpace(std::vector<std::string> labels) : impl_(make_checked(std::move(labels))) {}

SampleSpace::SampleSpace(std::initializer_list<std::string> labels)
    : SampleSpace(std::vector<std::string>(labels)) {}

SampleSpace SampleSpace::product(const std::vector<SampleSpace>& components) {
  std::size_t n = 1;
  for (const auto& c : components) {
    if (c.size() != 0 && n > max_space_size / c.size())
      fail(ErrorKind::SizeLimit, "product space exceeds " + std::to_string(max_space_size) + " elements");
    n *= c.size();
  }
  std::vector<std::string> labels;
  labels.reserve(n);
  std::vector<std::size_t> coords(components.size(), 0);
  for (std::size_t k = 0; k < n; ++k) {
    std::string l;
    for (std::size_t c = 0; c < components.size(); ++c) {
      if (c) l += ',';
      l += components[c].label(coords[c]);
    }
    labels.push_back(std::move(l));
    for (std::size_t c = components.size(); c-- > 0;) {
      if (++coords[c] < components[c].size()) break;
      coords[c] = 0;
    }
  }
  SampleSpace s;
  auto impl = std::make_shared<Impl>();
  impl->labels = std::move(labels);
  impl->components = components;
  s.impl_ = impl;
  return s;
}

SampleSpace SampleSpace::power(const SampleSpace& base, std::size_t n) {
  return product(std::vector<SampleSpace>(n, base));
}

std::size_t SampleSpace::size() const { return impl_->labels.size(); }

const std::string& SampleSpace::label(std::size_t i) const {
  if (i >= impl_->labels.size()) fail(ErrorKind::UnknownElement, "index " + std::to_string(i));
  return impl_->labels[i];
}

const std::vector<std::string>& SampleSpace::labels() const { return impl_->labels; }

std::size_t SampleSpace::index(std::string_view label) const {
  impl_->build_index();
  auto it = impl_->index.find(label);
  if (it == impl_->index.end()) fail(ErrorKind::UnknownElement, "\"" + std::string(label) + "\"");
  return it->second;
}

bool SampleSpace::contains(std::string_view label) const {
  impl_->build_index();
  return impl_->index.count(label) != 0;
}

bool SampleSpace::is_product() const { return !impl_->components.empty(); }

const std::vector<SampleSpace>& SampleSpace::components() const { return impl_->components; }

std::vector<std::size_t> SampleSpace::unflatten(std::size_t i) const {
  const auto& comps = impl_->components;
  std::vector<std::size_t> coords(comps.size());
  for (std::size_t c = comps.size(); c-- > 0;) {
    coords[c] = i % comps[c].size();
    i /= comps[c].size();
  }
  return coords;
}

std::size_t SampleSpace::flatten(const std::vector<std::size_t>& coords) const {
  const auto& comps = impl_->components;
  if (coords.size() != comps.size()) fail(ErrorKind::SpaceMismatch, "coordinate arity");
  std::size_t i = 0;
  for (std::size_t c = 0; c < comps.size(); ++c) i = i * comps[c].size() + coords[c];
  return i;
}

bool operator==(const SampleSpace& a, const SampleSpace& b) {
  return a.impl_ == b.impl_ || a.impl_->labels == b.impl_->labels;
}

void require_same(const SampleSpace& a, const SampleSpace& b, std::string_view what) {
  if (!(a == b)) fail(ErrorKind::SpaceMismatch, std::string(what));
}

}  // namespace wiser
