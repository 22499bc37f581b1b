#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace wiser::checks {

using Rng = std::mt19937_64;

enum class Outcome { Pass, Skip, Fail };

struct TrialResult {
  Outcome outcome = Outcome::Pass;
  std::string detail;
};

inline TrialResult pass(std::string detail = {}) { return {Outcome::Pass, std::move(detail)}; }
inline TrialResult skip(std::string detail = {}) { return {Outcome::Skip, std::move(detail)}; }
inline TrialResult failure(std::string detail) { return {Outcome::Fail, std::move(detail)}; }

/// ForAll: every trial must pass (skips allowed). Exists: at least one trial
/// must pass, i.e. produce a witness. Once: a fixed instance, run a single time.
enum class Kind { ForAll, Exists, Once };

struct Property {
  std::string id;
  Kind kind;
  std::function<TrialResult(Rng&)> trial;
};

struct PropertyReport {
  std::string id;
  Kind kind;
  std::size_t trials = 0;
  std::size_t passed = 0;
  std::size_t skipped = 0;
  std::size_t failed = 0;
  bool ok = false;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  std::vector<PropertyReport> properties;
  bool ok() const;
};

/// Named suites; "all" runs every theorem suite. "grids" holds the numeric
/// grid claims and is not part of "all".
std::vector<std::string> suite_names();
const std::vector<Property>& suite(std::string_view name);

/// Deterministic in (name, trials, seed). Throws UnknownSuite.
SuiteReport run_suite(std::string_view name, std::size_t trials, std::uint64_t seed);
PropertyReport run_property(const Property& p, std::size_t trials, std::uint64_t seed);

std::string format(const SuiteReport& r);

}  // namespace wiser::checks
