#include "wiser/evidence.hpp"

namespace wiser {

std::string_view to_string(MatchStatus m) {
  switch (m) {
    case MatchStatus::NoMatch: return "NoMatch";
    case MatchStatus::Match: return "Match";
    case MatchStatus::PerfectMatch: return "PerfectMatch";
  }
  return "NoMatch";
}

}  // namespace wiser
