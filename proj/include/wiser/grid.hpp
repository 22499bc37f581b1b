#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wiser/channel.hpp"
#include "wiser/scalar.hpp"

namespace wiser {

enum class GridMode { JeffreyValidity, PearlValidity, JeffreyUpdate, PearlUpdate, VfeUpdate, VfeDklDelta };

std::string_view to_string(GridMode m);
/// "jeffrey-validity", "pearl-validity", ... Throws ParseError.
GridMode parse_grid_mode(std::string_view text);
std::vector<std::string> grid_mode_names();

/// Evidence i|c << 1_first> + j|c << 1_second> for 1 <= i <= imax, 1 <= j <= jmax.
/// Update modes report the posterior probability of the first domain element.
struct GridSpec {
  GridMode mode = GridMode::JeffreyValidity;
  std::uint64_t imax = 10;
  std::uint64_t jmax = 10;
  Channel<Rational> channel;
  Dist<Rational> prior;
  std::string first;
  std::string second;
};

/// The medical test channel and prior with outcomes p and n.
GridSpec medical_grid(GridMode mode, std::uint64_t imax = 10, std::uint64_t jmax = 10);

struct GridCell {
  std::uint64_t i;
  std::uint64_t j;
  Scalar value;
};

/// Row-major in i, then j. Errors carry the cell coordinates.
std::vector<GridCell> compute_grid(const GridSpec& spec);

/// D_KL(Flrn(phi), c >> w) and D_KL(Flrn(phi), c >> w_vfe) for phi = i|first> + j|second>.
std::pair<double, double> vfe_divergences(const GridSpec& spec, std::uint64_t i, std::uint64_t j);

/// "i,j,value" header, LF line endings, 12 significant digits.
std::string grid_csv(const std::vector<GridCell>& cells);

}  // namespace wiser
