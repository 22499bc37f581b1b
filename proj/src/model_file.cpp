#include "wiser/model_file.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace wiser {

namespace {

using Json = nlohmann::ordered_json;

std::pair<std::size_t, std::size_t> line_col(std::string_view text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

[[noreturn]] void schema(const std::string& where, const std::string& what) {
  throw ParseError(1, 1, where + ": " + what);
}

const Json& field(const Json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) schema(where, "expected an object");
  const auto it = obj.find(key);
  if (it == obj.end()) schema(where, std::string("missing field '") + key + "'");
  return *it;
}

std::string text_field(const Json& obj, const char* key, const std::string& where) {
  const Json& v = field(obj, key, where);
  if (!v.is_string()) schema(where + "." + key, "expected a string");
  return v.get<std::string>();
}

std::uint64_t count_field(const Json& obj, const char* key, const std::string& where) {
  const Json& v = field(obj, key, where);
  if (!v.is_number_unsigned()) schema(where + "." + key, "expected a natural number");
  return v.get<std::uint64_t>();
}

Rational scalar_of(const Json& v, const std::string& where) {
  try {
    if (v.is_string()) return parse_rational(v.get<std::string>());
    if (v.is_number_integer()) return Rational(v.get<std::int64_t>());
    if (v.is_number_float()) return parse_rational(shortest(v.get<double>()));
  } catch (const ParseError& e) {
    schema(where, e.message());
  }
  schema(where, "expected a number or a \"p/q\" string");
}

Vec<Rational> scalars_of(const Json& v, const std::string& where) {
  if (!v.is_array()) schema(where, "expected an array");
  Vec<Rational> out(static_cast<Eigen::Index>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i)
    out[static_cast<Eigen::Index>(i)] = scalar_of(v[i], where + "[" + std::to_string(i) + "]");
  return out;
}

Json scalars_json(const Vec<Rational>& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(to_string(v[i]));
  return out;
}

const Json& section(const Json& doc, const char* key) {
  static const Json empty = Json::object();
  const auto it = doc.find(key);
  if (it == doc.end()) return empty;
  if (!it->is_object()) schema(key, "expected an object");
  return *it;
}

template <class N>
auto find_named(const std::vector<N>& xs, std::string_view id) -> const N* {
  for (const auto& x : xs)
    if (x.id == id) return &x;
  return nullptr;
}

}  // namespace

std::string_view to_string(EntityKind k) {
  switch (k) {
    case EntityKind::Space: return "space";
    case EntityKind::Distribution: return "distribution";
    case EntityKind::Factor: return "factor";
    case EntityKind::Multiset: return "multiset";
    case EntityKind::Evidence: return "evidence";
    case EntityKind::Channel: return "channel";
  }
  return "";
}

void Model::claim(const std::string& id, EntityKind k) {
  if (id.empty()) throw ParseError(1, 1, "empty identifier");
  if (kind_of(id)) fail(ErrorKind::DuplicateElement, "identifier '" + id + "' is already defined");
  order_.emplace_back(id, k);
}

std::optional<EntityKind> Model::kind_of(std::string_view id) const {
  for (const auto& [name, k] : order_)
    if (name == id) return k;
  return std::nullopt;
}

std::vector<std::string> Model::ids() const {
  std::vector<std::string> out;
  for (const auto& [name, k] : order_) out.push_back(name);
  return out;
}

#define WISER_LOOKUP(method, member, Kind, Type)                                                    \
  const Type& Model::method(std::string_view id) const {                                           \
    if (const auto* n = find_named(member, id)) return n->value;                                   \
    const auto k = kind_of(id);                                                                    \
    fail(ErrorKind::UnknownElement, k ? "'" + std::string(id) + "' is a " + std::string(to_string(*k)) + \
                                            ", not a " + std::string(to_string(EntityKind::Kind))   \
                                      : "no entity named '" + std::string(id) + "'");              \
  }

WISER_LOOKUP(space, spaces_, Space, SampleSpace)
WISER_LOOKUP(distribution, dists_, Distribution, Dist<Rational>)
WISER_LOOKUP(factor, factors_, Factor, Factor<Rational>)
WISER_LOOKUP(multiset, multisets_, Multiset, Multiset)
WISER_LOOKUP(evidence, evidence_, Evidence, Evidence<Rational>)
WISER_LOOKUP(channel, channels_, Channel, Channel<Rational>)

#undef WISER_LOOKUP

void Model::add_space(const std::string& id, SampleSpace s) {
  claim(id, EntityKind::Space);
  spaces_.push_back({id, std::move(s), {}, {}});
}

void Model::add_distribution(const std::string& id, const std::string& space_id, Dist<Rational> d) {
  require_same(space(space_id), d.space(), "distribution '" + id + "' is not on space '" + space_id + "'");
  claim(id, EntityKind::Distribution);
  dists_.push_back({id, std::move(d), {space_id}, {}});
}

void Model::add_factor(const std::string& id, const std::string& space_id, Factor<Rational> f) {
  require_same(space(space_id), f.space(), "factor '" + id + "' is not on space '" + space_id + "'");
  claim(id, EntityKind::Factor);
  factors_.push_back({id, std::move(f), {space_id}, {}});
}

void Model::add_multiset(const std::string& id, const std::string& space_id, Multiset m) {
  require_same(space(space_id), m.space(), "multiset '" + id + "' is not on space '" + space_id + "'");
  claim(id, EntityKind::Multiset);
  multisets_.push_back({id, std::move(m), {space_id}, {}});
}

void Model::add_evidence(const std::string& id, const std::vector<std::pair<std::string, std::uint64_t>>& entries) {
  if (entries.empty()) fail(ErrorKind::EmptyEvidence, "evidence '" + id + "' has no entries");
  std::vector<typename Evidence<Rational>::Entry> resolved;
  for (const auto& [f, n] : entries) resolved.emplace_back(factor(f), n);
  Evidence<Rational> e(resolved);
  claim(id, EntityKind::Evidence);
  evidence_.push_back({id, std::move(e), {}, entries});
}

void Model::add_channel(const std::string& id, const std::string& dom, const std::string& cod, Channel<Rational> c) {
  require_same(space(dom), c.dom(), "channel '" + id + "' domain is not '" + dom + "'");
  require_same(space(cod), c.cod(), "channel '" + id + "' codomain is not '" + cod + "'");
  claim(id, EntityKind::Channel);
  channels_.push_back({id, std::move(c), {dom, cod}, {}});
}

Model Model::parse(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    const auto [line, col] = line_col(text, e.byte == 0 ? 0 : e.byte - 1);
    throw ParseError(line, col, "malformed JSON");
  }
  if (!doc.is_object()) schema("document", "expected an object");
  for (const auto& [key, v] : doc.items())
    if (key != "spaces" && key != "distributions" && key != "factors" && key != "multisets" && key != "evidence" &&
        key != "channels")
      schema("document", "unknown section '" + key + "'");

  Model m;
  for (const auto& [id, labels] : section(doc, "spaces").items()) {
    const std::string where = "spaces." + id;
    if (!labels.is_array()) schema(where, "expected an array of labels");
    std::vector<std::string> ls;
    for (const auto& l : labels) {
      if (!l.is_string()) schema(where, "labels must be strings");
      ls.push_back(l.get<std::string>());
    }
    m.add_space(id, SampleSpace(std::move(ls)));
  }
  for (const auto& [id, d] : section(doc, "distributions").items()) {
    const std::string where = "distributions." + id;
    const std::string s = text_field(d, "space", where);
    m.add_distribution(id, s, Dist<Rational>(m.space(s), scalars_of(field(d, "weights", where), where + ".weights")));
  }
  for (const auto& [id, f] : section(doc, "factors").items()) {
    const std::string where = "factors." + id;
    const std::string s = text_field(f, "space", where);
    m.add_factor(id, s, Factor<Rational>(m.space(s), scalars_of(field(f, "values", where), where + ".values")));
  }
  for (const auto& [id, ms] : section(doc, "multisets").items()) {
    const std::string where = "multisets." + id;
    const std::string s = text_field(ms, "space", where);
    const Json& counts = field(ms, "counts", where);
    if (!counts.is_array()) schema(where + ".counts", "expected an array");
    std::vector<std::pair<std::string, std::uint64_t>> kets;
    for (const auto& c : counts) kets.emplace_back(text_field(c, "element", where), count_field(c, "count", where));
    m.add_multiset(id, s, Multiset(m.space(s), kets));
  }
  for (const auto& [id, es] : section(doc, "evidence").items()) {
    const std::string where = "evidence." + id;
    if (!es.is_array()) schema(where, "expected an array");
    std::vector<std::pair<std::string, std::uint64_t>> entries;
    for (const auto& e : es) entries.emplace_back(text_field(e, "factor", where), count_field(e, "count", where));
    m.add_evidence(id, entries);
  }
  for (const auto& [id, c] : section(doc, "channels").items()) {
    const std::string where = "channels." + id;
    const std::string dom = text_field(c, "dom", where), cod = text_field(c, "cod", where);
    const Json& rows = field(c, "rows", where);
    if (!rows.is_array()) schema(where + ".rows", "expected an array");
    std::vector<Dist<Rational>> ds;
    for (std::size_t k = 0; k < rows.size(); ++k) {
      const std::string rw = where + ".rows[" + std::to_string(k) + "]";
      const std::string s = text_field(rows[k], "space", rw);
      if (s != cod) fail(ErrorKind::SpaceMismatch, rw + " is on '" + s + "', not the codomain '" + cod + "'");
      ds.emplace_back(m.space(s), scalars_of(field(rows[k], "weights", rw), rw + ".weights"));
    }
    m.add_channel(id, dom, cod, Channel<Rational>(m.space(dom), ds));
  }
  return m;
}

Model Model::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::IOFailure, "cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

std::string Model::serialize() const {
  Json doc = Json::object();
  if (!spaces_.empty()) {
    Json& out = doc["spaces"] = Json::object();
    for (const auto& s : spaces_) out[s.id] = s.value.labels();
  }
  if (!dists_.empty()) {
    Json& out = doc["distributions"] = Json::object();
    for (const auto& d : dists_) out[d.id] = {{"space", d.refs[0]}, {"weights", scalars_json(d.value.weights())}};
  }
  if (!factors_.empty()) {
    Json& out = doc["factors"] = Json::object();
    for (const auto& f : factors_) out[f.id] = {{"space", f.refs[0]}, {"values", scalars_json(f.value.values())}};
  }
  if (!multisets_.empty()) {
    Json& out = doc["multisets"] = Json::object();
    for (const auto& m : multisets_) {
      Json counts = Json::array();
      for (auto i : m.value.support()) counts.push_back({{"element", m.value.space().label(i)}, {"count", m.value(i)}});
      out[m.id] = {{"space", m.refs[0]}, {"counts", counts}};
    }
  }
  if (!evidence_.empty()) {
    Json& out = doc["evidence"] = Json::object();
    for (const auto& e : evidence_) {
      Json entries = Json::array();
      for (const auto& [f, n] : e.entries) entries.push_back({{"factor", f}, {"count", n}});
      out[e.id] = entries;
    }
  }
  if (!channels_.empty()) {
    Json& out = doc["channels"] = Json::object();
    for (const auto& c : channels_) {
      Json rows = Json::array();
      for (std::size_t x = 0; x < c.value.dom().size(); ++x)
        rows.push_back({{"space", c.refs[1]}, {"weights", scalars_json(c.value.row(x).weights())}});
      out[c.id] = {{"dom", c.refs[0]}, {"cod", c.refs[1]}, {"rows", rows}};
    }
  }
  return doc.dump(2) + "\n";
}

}  // namespace wiser
