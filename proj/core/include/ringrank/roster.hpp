#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ringrank/algebra.hpp"

namespace ringrank {

struct RosterEntry {
  std::string id;
  Algebra algebra;
};

/// The rings the property suites run on by default, sorted by id:
/// M_2(F_2), M_2(F_3), M_3(F_2), T_2(F_2), T_3(F_2), the block example for
/// (m, n) = (1,1), (1,2), (2,1) over F_2, and M_2(F_3) + F_3.
std::vector<RosterEntry> default_roster();

/// One roster ring by id, e.g. "m2f2" or "block12f2".
std::optional<RosterEntry> roster_entry(std::string_view id);

}  // namespace ringrank
