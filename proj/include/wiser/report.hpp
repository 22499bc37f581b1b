#pragma once

#include <string>

namespace wiser {

/// Every quantity of the built-in medical example, one "name = exact" line
/// followed by "name ~ decimal".
std::string medical_report();

}  // namespace wiser
