#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wiser/channel.hpp"

namespace wiser {

enum class EntityKind { Space, Distribution, Factor, Multiset, Evidence, Channel };

std::string_view to_string(EntityKind k);

/// Named spaces, distributions, factors, multisets, evidence and channels.
/// Identifiers are unique across all kinds and entities keep insertion order.
///
/// JSON layout:
///   spaces:        {id: [label, ...]}
///   distributions: {id: {space, weights: [...]}}
///   factors:       {id: {space, values: [...]}}
///   multisets:     {id: {space, counts: [{element, count}, ...]}}
///   evidence:      {id: [{factor, count}, ...]}
///   channels:      {id: {dom, cod, rows: [{space, weights}, ...]}}
/// Scalars are "p/q" strings; JSON numbers are read through their decimal text.
class Model {
 public:
  /// ParseError for malformed JSON or schema; resolution and validation
  /// errors keep their own kind.
  static Model parse(std::string_view text);
  /// IOFailure when unreadable.
  static Model load(const std::filesystem::path& path);

  /// Two-space indented JSON, exact scalars as strings, trailing newline.
  std::string serialize() const;

  void add_space(const std::string& id, SampleSpace s);
  void add_distribution(const std::string& id, const std::string& space, Dist<Rational> d);
  void add_factor(const std::string& id, const std::string& space, Factor<Rational> f);
  void add_multiset(const std::string& id, const std::string& space, Multiset m);
  void add_evidence(const std::string& id, const std::vector<std::pair<std::string, std::uint64_t>>& entries);
  void add_channel(const std::string& id, const std::string& dom, const std::string& cod, Channel<Rational> c);

  std::optional<EntityKind> kind_of(std::string_view id) const;
  std::vector<std::string> ids() const;

  /// UnknownElement when the id is missing or of another kind.
  const SampleSpace& space(std::string_view id) const;
  const Dist<Rational>& distribution(std::string_view id) const;
  const Factor<Rational>& factor(std::string_view id) const;
  const Multiset& multiset(std::string_view id) const;
  const Evidence<Rational>& evidence(std::string_view id) const;
  const Channel<Rational>& channel(std::string_view id) const;

 private:
  template <class T>
  struct Named {
    std::string id;
    T value;
    std::vector<std::string> refs;
    std::vector<std::pair<std::string, std::uint64_t>> entries;
  };

  void claim(const std::string& id, EntityKind k);

  std::vector<std::pair<std::string, EntityKind>> order_;
  std::vector<Named<SampleSpace>> spaces_;
  std::vector<Named<Dist<Rational>>> dists_;
  std::vector<Named<Factor<Rational>>> factors_;
  std::vector<Named<Multiset>> multisets_;
  std::vector<Named<Evidence<Rational>>> evidence_;
  std::vector<Named<Channel<Rational>>> channels_;
};

}  // namespace wiser
