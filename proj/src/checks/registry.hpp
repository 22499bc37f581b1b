#pragma once

#include <string>
#include <utility>
#include <vector>

#include "wiser/checks.hpp"

namespace wiser::checks::detail {

using Suites = std::vector<std::pair<std::string, std::vector<Property>>>;

void add_core(Suites& s);
void add_distribution(Suites& s);
void add_validity(Suites& s);
void add_update(Suites& s);
void add_channel(Suites& s);
void add_divergence(Suites& s);

}  // namespace wiser::checks::detail
