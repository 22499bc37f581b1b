#include <sstream>

#include "registry.hpp"
#include "wiser/error.hpp"

namespace wiser::checks {

namespace {

const detail::Suites& registry() {
  static const detail::Suites suites = [] {
    detail::Suites s;
    detail::add_core(s);
    detail::add_distribution(s);
    detail::add_validity(s);
    detail::add_update(s);
    detail::add_channel(s);
    detail::add_divergence(s);
    std::vector<Property> all;
    for (const auto& [name, props] : s)
      if (name != "grids" && name != "jeffrey-order")
        all.insert(all.end(), props.begin(), props.end());
    s.emplace_back("all", std::move(all));
    return s;
  }();
  return suites;
}

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string_view kind_name(Kind k) {
  switch (k) {
    case Kind::ForAll: return "forall";
    case Kind::Exists: return "exists";
    case Kind::Once: return "fixed";
  }
  return "";
}

}  // namespace

bool SuiteReport::ok() const {
  for (const auto& p : properties)
    if (!p.ok) return false;
  return true;
}

std::vector<std::string> suite_names() {
  std::vector<std::string> names;
  for (const auto& [name, props] : registry()) names.push_back(name);
  return names;
}

const std::vector<Property>& suite(std::string_view name) {
  for (const auto& [n, props] : registry())
    if (n == name) return props;
  std::string known;
  for (const auto& n : suite_names()) known += (known.empty() ? "" : ", ") + n;
  fail(ErrorKind::UnknownSuite, "\"" + std::string(name) + "\" (known: " + known + ")");
}

PropertyReport run_property(const Property& p, std::size_t trials, std::uint64_t seed) {
  PropertyReport r{p.id, p.kind};
  const std::size_t n = p.kind == Kind::Once ? 1 : trials;
  const std::uint64_t h = fnv1a(p.id);
  std::string first_pass;
  for (std::size_t t = 0; t < n; ++t) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(h), static_cast<std::uint32_t>(h >> 32),
                      static_cast<std::uint32_t>(t)};
    Rng g(seq);
    TrialResult res;
    try {
      res = p.trial(g);
    } catch (const std::exception& e) {
      res = failure(std::string("exception: ") + e.what());
    }
    ++r.trials;
    switch (res.outcome) {
      case Outcome::Pass:
        ++r.passed;
        if (first_pass.empty()) first_pass = res.detail;
        break;
      case Outcome::Skip: ++r.skipped; break;
      case Outcome::Fail:
        ++r.failed;
        if (r.detail.empty()) r.detail = "trial " + std::to_string(t) + ": " + res.detail;
        break;
    }
  }
  if (p.kind == Kind::Exists) {
    r.ok = r.passed > 0;
    r.detail = r.ok ? std::to_string(r.passed) + " witness(es); first: " + first_pass : "no witness found";
  } else {
    r.ok = r.failed == 0;
    if (r.ok && !first_pass.empty()) r.detail = first_pass;
  }
  return r;
}

SuiteReport run_suite(std::string_view name, std::size_t trials, std::uint64_t seed) {
  const auto& props = suite(name);
  SuiteReport rep{std::string(name), trials, seed, {}};
  for (const auto& p : props) rep.properties.push_back(run_property(p, trials, seed));
  return rep;
}

std::string format(const SuiteReport& r) {
  std::ostringstream out;
  std::size_t bad = 0;
  for (const auto& p : r.properties) {
    out << (p.ok ? "PASS " : "FAIL ") << p.id << " [" << kind_name(p.kind) << "] trials=" << p.trials;
    if (p.skipped) out << " skipped=" << p.skipped;
    if (p.failed && p.kind != Kind::Exists) out << " failures=" << p.failed;
    if (!p.detail.empty()) out << " | " << p.detail;
    out << '\n';
    if (!p.ok) ++bad;
  }
  out << "suite " << r.suite << " seed=" << r.seed << " trials=" << r.trials << ": " << r.properties.size()
      << " properties, " << bad << " failed\n";
  return out.str();
}

}  // namespace wiser::checks
