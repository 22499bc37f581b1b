#include "wiser/grid.hpp"

#include <array>

#include "wiser/builtin.hpp"
#include "wiser/update.hpp"

namespace wiser {

namespace {

constexpr std::array<std::pair<GridMode, std::string_view>, 6> kModes{{
    {GridMode::JeffreyValidity, "jeffrey-validity"},
    {GridMode::PearlValidity, "pearl-validity"},
    {GridMode::JeffreyUpdate, "jeffrey-update"},
    {GridMode::PearlUpdate, "pearl-update"},
    {GridMode::VfeUpdate, "vfe-update"},
    {GridMode::VfeDklDelta, "vfe-dkl-delta"},
}};

Multiset outcomes(const GridSpec& spec, std::uint64_t i, std::uint64_t j) {
  const SampleSpace& y = spec.channel.cod();
  std::vector<std::uint64_t> counts(y.size(), 0);
  counts[y.index(spec.first)] += i;
  counts[y.index(spec.second)] += j;
  return Multiset(y, counts);
}

Scalar cell_value(const GridSpec& spec, std::uint64_t i, std::uint64_t j) {
  const Evidence<Rational> psi = triple_pull(spec.channel, outcomes(spec, i, j));
  switch (spec.mode) {
    case GridMode::JeffreyValidity: return jeffrey_validity(spec.prior, psi);
    case GridMode::PearlValidity: return pearl_validity(spec.prior, psi);
    case GridMode::JeffreyUpdate: return jeffrey_update(spec.prior, psi)(0);
    case GridMode::PearlUpdate: return pearl_update(spec.prior, psi)(0);
    case GridMode::VfeUpdate: return vfe_update(spec.prior, psi)(0);
    case GridMode::VfeDklDelta: {
      const auto [before, after] = vfe_divergences(spec, i, j);
      return after - before;
    }
  }
  return Scalar();
}

}  // namespace

std::string_view to_string(GridMode m) {
  for (const auto& [mode, name] : kModes)
    if (mode == m) return name;
  return "";
}

GridMode parse_grid_mode(std::string_view text) {
  for (const auto& [mode, name] : kModes)
    if (name == text) return mode;
  throw ParseError(1, 1, "unknown grid mode '" + std::string(text) + "'");
}

std::vector<std::string> grid_mode_names() {
  std::vector<std::string> out;
  for (const auto& [mode, name] : kModes) out.emplace_back(name);
  return out;
}

GridSpec medical_grid(GridMode mode, std::uint64_t imax, std::uint64_t jmax) {
  const Medical& m = medical();
  return GridSpec{mode, imax, jmax, m.channel, m.prior, "p", "n"};
}

std::vector<GridCell> compute_grid(const GridSpec& spec) {
  if (spec.imax < 1 || spec.jmax < 1) fail(ErrorKind::SizeLimit, "grid bounds must be at least 1");
  std::vector<GridCell> cells;
  for (std::uint64_t i = 1; i <= spec.imax; ++i) {
    for (std::uint64_t j = 1; j <= spec.jmax; ++j) {
      try {
        cells.push_back({i, j, cell_value(spec, i, j)});
      } catch (const Error& e) {
        fail(e.kind(), "cell (" + std::to_string(i) + "," + std::to_string(j) + "): " + e.message());
      }
    }
  }
  return cells;
}

std::pair<double, double> vfe_divergences(const GridSpec& spec, std::uint64_t i, std::uint64_t j) {
  const Multiset phi = outcomes(spec, i, j);
  const Dist<Rational> goal = flrn(phi);
  const Dist<double> post = vfe_update(spec.prior, triple_pull(spec.channel, phi));
  const double before = kl_divergence(goal, push(spec.channel, spec.prior));
  const double after = kl_divergence(goal, push(spec.channel.cast<double>(), post));
  return {before, after};
}

std::string grid_csv(const std::vector<GridCell>& cells) {
  std::string out = "i,j,value\n";
  for (const auto& c : cells) {
    out += std::to_string(c.i) + "," + std::to_string(c.j) + ",";
    out += c.value.exact() ? to_decimal(c.value.rational()) : to_decimal(c.value.as_double());
    out += "\n";
  }
  return out;
}

}  // namespace wiser
